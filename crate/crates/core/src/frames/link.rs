use serde::{Deserialize, Serialize};

use super::form::{ExteriorForm, RANK};
use super::matrix::{bracket, bracket_pm, MatrixForm};
use super::structure::StructureConstants;
use crate::arith::{QSqrt3, Rational};
use crate::error::{Error, Result};

/// Number of normal directions of a three-fold in `R^7`.
pub const NORMAL_RANK: usize = 4;

/// Connection data of an adapted frame along an associative link, with the
/// normal coframe pulled back to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameData {
    pub structure: StructureConstants,
    /// Tangential connection `alpha`, three 1-forms.
    pub alpha: Vec<ExteriorForm>,
    /// `beta^a_j`: rows are normal directions `f4..f7`, columns tangential.
    pub beta: MatrixForm,
    /// Normal connection `gamma`, three 1-forms.
    pub gamma: Vec<ExteriorForm>,
}

fn w(i: usize) -> ExteriorForm {
    ExteriorForm::generator(i)
}

fn q(n: i64, d: i64) -> QSqrt3 {
    QSqrt3::rational(Rational::frac(n, d))
}

/// `2 / sqrt 3`.
pub fn two_over_sqrt3() -> QSqrt3 {
    QSqrt3::new(Rational::zero(), Rational::frac(2, 3))
}

impl FrameData {
    /// The frame on the twisted cubic link `SU(2)/Z_3`.
    pub fn twisted_cubic_link() -> Self {
        Self::twisted_cubic_link_with(&QSqrt3::from(2))
    }

    /// As [`FrameData::twisted_cubic_link`] with `gamma = ((2/3) w1, a w2, a w3)`;
    /// the structure equations pin `a^2 = 4`.
    pub fn twisted_cubic_link_with(a: &QSqrt3) -> Self {
        let c = two_over_sqrt3();
        let zero = ExteriorForm::zero(1);
        let beta = MatrixForm::new(
            NORMAL_RANK,
            RANK,
            vec![
                zero.clone(),
                w(2).scale(&c),
                -&w(3).scale(&c),
                zero.clone(),
                w(3).scale(&c),
                w(2).scale(&c),
                zero.clone(),
                zero.clone(),
                zero.clone(),
                zero.clone(),
                zero.clone(),
                zero,
            ],
        )
        .expect("4x3 of 1-forms");
        FrameData {
            structure: StructureConstants::twisted_cubic_link(),
            alpha: vec![w(1).scale(&q(-1, 3)), w(2), w(3)],
            beta,
            gamma: vec![w(1).scale(&q(2, 3)), w(2).scale(a), w(3).scale(a)],
        }
    }

    fn omega() -> MatrixForm {
        MatrixForm::column((1..=RANK).map(w).collect()).expect("column")
    }

    /// `h^a_jk` with `beta^a_j = sum_k h^a_jk omega_k`.
    fn raw_h(&self) -> Result<Vec<Vec<Vec<QSqrt3>>>> {
        if self.beta.degree() != 1 || (self.beta.rows(), self.beta.cols()) != (NORMAL_RANK, RANK) {
            return Err(Error::Precondition(
                "beta must be a 4x3 matrix of 1-forms".into(),
            ));
        }
        Ok((0..NORMAL_RANK)
            .map(|a| {
                (0..RANK)
                    .map(|j| {
                        (1..=RANK)
                            .map(|k| self.beta.get(a, j).coefficient(&[k]))
                            .collect()
                    })
                    .collect()
            })
            .collect())
    }

    pub fn second_fundamental_form(&self) -> Result<SecondFundamentalForm> {
        let h = self.raw_h()?;
        for (a, ha) in h.iter().enumerate() {
            for j in 0..RANK {
                for k in j + 1..RANK {
                    if ha[j][k] != ha[k][j] {
                        return Err(Error::AsymmetricSecondFundamentalForm {
                            a: a + 4,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(SecondFundamentalForm { h })
    }

    pub fn verify_structure_equations(&self) -> Result<StructureReport> {
        let sc = &self.structure;
        let omega = Self::omega();
        let alpha = bracket(&self.alpha)?;
        let half = q(1, 2);
        let quarter = q(1, 4);
        let alpha_minus_omega: Vec<ExteriorForm> = self
            .alpha
            .iter()
            .zip(1..=RANK)
            .map(|(a, i)| a - &w(i))
            .collect();
        let p = bracket_pm(&alpha_minus_omega, 1)?;
        let g = bracket_pm(&self.gamma, -1)?;
        let pg = p.add(&g)?;

        let torsion = omega.d(sc)?.add(&alpha.wedge(&omega)?)?;
        let gauss = alpha
            .d(sc)?
            .add(&alpha.wedge(&alpha)?)?
            .sub(&omega.wedge(&omega.transpose())?)?
            .sub(&self.beta.transpose().wedge(&self.beta)?)?;
        let codazzi = self
            .beta
            .d(sc)?
            .add(&self.beta.wedge(&alpha)?)?
            .add(&pg.scale(&half).wedge(&self.beta)?)?;
        let ricci = pg
            .d(sc)?
            .scale(&half)
            .add(&p.wedge(&p)?.scale(&quarter))?
            .add(&g.wedge(&g)?.scale(&quarter))?
            .sub(&self.beta.wedge(&self.beta.transpose())?)?;

        let symmetric = {
            let h = self.raw_h()?;
            let mut residuals = Vec::new();
            for (a, ha) in h.iter().enumerate() {
                for j in 0..RANK {
                    for k in j + 1..RANK {
                        let diff = &ha[j][k] - &ha[k][j];
                        if !diff.is_zero() {
                            let (a, j, k) = (a + 4, j + 1, k + 1);
                            let value = format!("h^{a}_{j}{k} - h^{a}_{k}{j} = {diff}");
                            residuals.push(ResidualEntry {
                                row: a,
                                col: j,
                                value,
                            });
                        }
                    }
                }
            }
            EquationCheck {
                name: "symmetry".into(),
                statement: "beta = h omega with h^a_jk = h^a_kj".into(),
                passed: residuals.is_empty(),
                residuals,
            }
        };

        let equations = vec![
            EquationCheck::from_residual("torsion", "d omega + [alpha] ^ omega = 0", &torsion),
            symmetric,
            EquationCheck::from_residual(
                "gauss",
                "d[alpha] + [alpha] ^ [alpha] - omega ^ omega^T - beta^T ^ beta = 0",
                &gauss,
            ),
            EquationCheck::from_residual(
                "codazzi",
                "d beta + beta ^ [alpha] + (1/2)([alpha - omega]_+ + [gamma]_-) ^ beta = 0",
                &codazzi,
            ),
            EquationCheck::from_residual(
                "ricci",
                "(1/2) d([alpha - omega]_+ + [gamma]_-) + (1/4)[alpha - omega]_+ ^ [alpha - omega]_+ \
                 + (1/4)[gamma]_- ^ [gamma]_- - beta ^ beta^T = 0",
                &ricci,
            ),
        ];
        let all_passed = equations.iter().all(|e| e.passed);
        Ok(StructureReport {
            equations,
            all_passed,
        })
    }
}

/// One nonzero residual entry, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualEntry {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationCheck {
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub residuals: Vec<ResidualEntry>,
}

impl EquationCheck {
    fn from_residual(name: &str, statement: &str, residual: &MatrixForm) -> Self {
        let residuals: Vec<ResidualEntry> = residual
            .nonzero_entries()
            .into_iter()
            .map(|(r, c, e)| ResidualEntry {
                row: r + 1,
                col: c + 1,
                value: e.to_string(),
            })
            .collect();
        EquationCheck {
            name: name.into(),
            statement: statement.into(),
            passed: residuals.is_empty(),
            residuals,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub equations: Vec<EquationCheck>,
    pub all_passed: bool,
}

impl StructureReport {
    /// Turns the first failing equation into an error.
    pub fn into_result(self) -> Result<Self> {
        match self.equations.iter().find(|e| !e.passed) {
            Some(e) => Err(Error::StructureEquation(e.name.clone())),
            None => Ok(self),
        }
    }
}

/// `h^a_jk` for normal `a` in `4..=7` and tangential `j, k` in `1..=3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondFundamentalForm {
    h: Vec<Vec<Vec<QSqrt3>>>,
}

impl SecondFundamentalForm {
    pub fn get(&self, a: usize, j: usize, k: usize) -> &QSqrt3 {
        &self.h[a - 4][j - 1][k - 1]
    }

    /// `sum_j h^a_jj`.
    pub fn trace(&self, a: usize) -> QSqrt3 {
        (1..=RANK).fold(QSqrt3::zero(), |acc, j| acc + self.get(a, j, j).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_frame_is_consistent() {
        let report = FrameData::twisted_cubic_link()
            .verify_structure_equations()
            .unwrap();
        for e in &report.equations {
            assert!(e.passed, "{}: {:?}", e.name, e.residuals);
        }
        assert_eq!(report.equations.len(), 5);
        assert!(report.all_passed);
    }

    #[test]
    fn normal_connection_is_pinned() {
        // only a^2 enters, so a = -2 is the same frame with the normal orientation flipped
        assert!(
            FrameData::twisted_cubic_link_with(&QSqrt3::from(-2))
                .verify_structure_equations()
                .unwrap()
                .all_passed
        );
        for a in [0, 1, 3] {
            let report = FrameData::twisted_cubic_link_with(&QSqrt3::from(a))
                .verify_structure_equations()
                .unwrap();
            let ricci = report.equations.iter().find(|e| e.name == "ricci").unwrap();
            assert!(!ricci.passed, "a = {a}");
            assert!(!ricci.residuals.is_empty());
            assert_eq!(
                report.into_result().unwrap_err(),
                Error::StructureEquation("ricci".into())
            );
        }
    }

    #[test]
    fn perturbed_beta_fails_torsion_free_checks() {
        let mut frame = FrameData::twisted_cubic_link();
        frame.alpha[0] = w(1);
        let report = frame.verify_structure_equations().unwrap();
        assert!(!report.equations[0].passed);
        assert!(!report.all_passed);
    }

    #[test]
    fn second_fundamental_form_entries() {
        let h = FrameData::twisted_cubic_link()
            .second_fundamental_form()
            .unwrap();
        let c = two_over_sqrt3();
        assert_eq!(h.get(4, 2, 2), &c);
        assert_eq!(h.get(4, 3, 3), &-&c);
        assert_eq!(h.get(5, 2, 3), &c);
        assert_eq!(h.get(5, 3, 2), &c);
        assert!(h.get(4, 2, 3).is_zero());
        for a in 4..=7 {
            assert!(h.trace(a).is_zero());
            for k in 1..=3 {
                assert!(h.get(a, 1, k).is_zero());
            }
        }
    }

    #[test]
    fn asymmetric_beta_is_rejected() {
        let mut frame = FrameData::twisted_cubic_link();
        let mut entries: Vec<ExteriorForm> = (0..4)
            .flat_map(|a| (0..3).map(move |j| (a, j)))
            .map(|(a, j)| frame.beta.get(a, j).clone())
            .collect();
        entries[1] = &entries[1] + &w(3);
        frame.beta = MatrixForm::new(4, 3, entries).unwrap();
        assert_eq!(
            frame.second_fundamental_form().unwrap_err(),
            Error::AsymmetricSecondFundamentalForm { a: 4, j: 2, k: 3 }
        );
        let report = frame.verify_structure_equations().unwrap();
        assert!(!report.equations[1].passed);
    }
}
