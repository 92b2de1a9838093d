use serde::{Deserialize, Serialize};

use super::form::{ExteriorForm, RANK};
use crate::arith::{QSqrt3, Rational};
use crate::error::{Error, Result};

/// Brackets `[e_i, e_j] = sum_k c^k_ij e_k` of a three-dimensional Lie algebra.
///
/// The dual coframe satisfies `d omega_k = -sum_{i<j} c^k_ij omega_i ^ omega_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    /// `c[i][j][k]`, zero-based.
    c: [[[Rational; RANK]; RANK]; RANK],
}

impl StructureConstants {
    pub fn new(c: [[[Rational; RANK]; RANK]; RANK]) -> Result<Self> {
        for i in 0..RANK {
            for j in 0..RANK {
                for k in 0..RANK {
                    if c[i][j][k] != -&c[j][i][k] {
                        return Err(Error::Precondition(format!(
                            "structure constants not antisymmetric at c^{}_{}{}",
                            k + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(StructureConstants { c })
    }

    /// Builds the table from `[e_1,e_2]`, `[e_1,e_3]`, `[e_2,e_3]`.
    pub fn from_brackets(
        e12: [Rational; RANK],
        e13: [Rational; RANK],
        e23: [Rational; RANK],
    ) -> Result<Self> {
        let mut c: [[[Rational; RANK]; RANK]; RANK] = Default::default();
        for (i, j, v) in [(0, 1, e12), (0, 2, e13), (1, 2, e23)] {
            for k in 0..RANK {
                c[j][i][k] = -&v[k];
                c[i][j][k] = v[k].clone();
            }
        }
        Self::new(c)
    }

    /// The left-invariant frame on `SU(2)` adapted to the twisted cubic link:
    /// `[e1,e2] = -(2/3) e3`, `[e1,e3] = (2/3) e2`, `[e2,e3] = -2 e1`.
    pub fn twisted_cubic_link() -> Self {
        let z = Rational::zero;
        Self::from_brackets(
            [z(), z(), Rational::frac(-2, 3)],
            [z(), Rational::frac(2, 3), z()],
            [Rational::from(-2), z(), z()],
        )
        .expect("antisymmetric by construction")
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    fn bracket(&self, x: &[Rational; RANK], y: &[Rational; RANK]) -> [Rational; RANK] {
        let mut out: [Rational; RANK] = Default::default();
        for i in 0..RANK {
            for j in 0..RANK {
                let xy = &x[i] * &y[j];
                if xy.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &xy * &self.c[i][j][k];
                }
            }
        }
        out
    }

    pub fn jacobi_holds(&self) -> bool {
        let basis = |i: usize| -> [Rational; RANK] {
            let mut e: [Rational; RANK] = Default::default();
            e[i] = Rational::one();
            e
        };
        for i in 0..RANK {
            for j in 0..RANK {
                for k in 0..RANK {
                    let (a, b, c) = (basis(i), basis(j), basis(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    if (0..RANK).any(|n| !(&t1[n] + &t2[n] + &t3[n]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `d omega_k` for `k` in `1..=3`.
    pub fn d_generator(&self, k: usize) -> ExteriorForm {
        let mut out = ExteriorForm::zero(2);
        for i in 0..RANK {
            for j in i + 1..RANK {
                let c = &self.c[i][j][k - 1];
                if !c.is_zero() {
                    out = &out + &ExteriorForm::monomial(QSqrt3::rational(-c), &[i + 1, j + 1]);
                }
            }
        }
        out
    }

    /// Exterior derivative of a constant-coefficient form, by Leibniz.
    pub fn d(&self, form: &ExteriorForm) -> Result<ExteriorForm> {
        if form.degree() >= RANK {
            return Err(Error::DegreeOverflow(form.degree(), 1));
        }
        let mut out = ExteriorForm::zero(form.degree() + 1);
        for (idx, c) in form.terms() {
            // d(w_i1 ^ ... ^ w_ip) = sum_p (-1)^p w_i1 ^ .. ^ d w_ip ^ ..
            for p in 0..idx.len() {
                let mut piece = ExteriorForm::constant(if p % 2 == 0 { 1 } else { -1 });
                for (q, &i) in idx.iter().enumerate() {
                    let factor = if q == p {
                        self.d_generator(i)
                    } else {
                        ExteriorForm::generator(i)
                    };
                    piece = piece.wedge(&factor)?;
                }
                out = &out + &piece.scale(c);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(i: usize) -> ExteriorForm {
        ExteriorForm::generator(i)
    }

    #[test]
    fn generators() {
        let sc = StructureConstants::twisted_cubic_link();
        assert_eq!(sc.d(&w(1)).unwrap(), ExteriorForm::monomial(2, &[2, 3]));
        assert_eq!(
            sc.d(&w(2)).unwrap(),
            ExteriorForm::monomial(QSqrt3::rational(Rational::frac(-2, 3)), &[1, 3])
        );
        assert_eq!(
            sc.d(&w(3)).unwrap(),
            ExteriorForm::monomial(QSqrt3::rational(Rational::frac(2, 3)), &[1, 2])
        );
        assert!(sc.d(&ExteriorForm::constant(7)).unwrap().is_zero());
        assert!(sc.d(&ExteriorForm::monomial(1, &[1, 2, 3])).is_err());
    }

    #[test]
    fn surd_differential() {
        // d((2/sqrt3) w2) = -(4/(3 sqrt3)) w1 ^ w3
        let sc = StructureConstants::twisted_cubic_link();
        let c = QSqrt3::new(Rational::zero(), Rational::frac(2, 3));
        let got = sc.d(&w(2).scale(&c)).unwrap();
        assert_eq!(
            got.coefficient(&[1, 3]),
            QSqrt3::new(Rational::zero(), Rational::frac(-4, 9))
        );
    }

    #[test]
    fn jacobi_and_d_squared() {
        let sc = StructureConstants::twisted_cubic_link();
        assert!(sc.jacobi_holds());
        for i in 1..=3 {
            assert!(sc.d(&sc.d(&w(i)).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn jacobi_failure_is_detected() {
        // a table that is antisymmetric but not a Lie algebra
        let z = Rational::zero;
        let bad = StructureConstants::from_brackets(
            [z(), z(), 1.into()],
            [z(), z(), 1.into()],
            [z(), 1.into(), z()],
        )
        .unwrap();
        assert!(!bad.jacobi_holds());
    }

    #[test]
    fn antisymmetry_is_required() {
        let mut c: [[[Rational; RANK]; RANK]; RANK] = Default::default();
        c[0][1][2] = Rational::one();
        assert!(StructureConstants::new(c).is_err());
    }
}
