//! Spectrum of `2 dbar^* dbar` on a line bundle over CP^1 with a metric of
//! constant scalar curvature `kappa`.
//!
//! For a bundle of degree `d`, with `shift = 0` when `d >= 0` and `1`
//! otherwise, the eigenvalues are
//!
//! ```text
//! lambda_q = (kappa / 2) [ (q + shift)^2 + (q + shift) |d + 1| ],   q = 0, 1, 2, ...
//! ```
//!
//! with multiplicity `1 + |d| + 2q`. All eigenvalues here are for the doubled
//! operator; callers working with `dbar^* dbar` double their target first.

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::riemann_roch::{h0, LineBundle};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumQuery {
    pub degree: i64,
    pub kappa: Rational,
}

impl SpectrumQuery {
    pub fn new(degree: i64, kappa: Rational) -> Result<Self> {
        if !kappa.is_positive() {
            return Err(Error::Precondition(format!(
                "scalar curvature must be positive, got {kappa}"
            )));
        }
        Ok(SpectrumQuery { degree, kappa })
    }

    pub fn shift(&self) -> u64 {
        if self.degree >= 0 {
            0
        } else {
            1
        }
    }

    fn abs_degree_plus_one(&self) -> u64 {
        (self.degree + 1).unsigned_abs()
    }

    /// Eigenvalue at the level `t = q + shift`.
    fn eigenvalue_at(&self, t: u64) -> Rational {
        let t = Rational::from(t);
        let b = Rational::from(self.abs_degree_plus_one());
        &self.kappa / Rational::from(2) * (&t * &t + &t * &b)
    }

    pub fn line(&self, q: u64) -> SpectralLine {
        let shift = self.shift();
        SpectralLine {
            degree: self.degree,
            eigenvalue: self.eigenvalue_at(q + shift),
            q,
            shift: shift as u8,
            multiplicity: 1 + self.degree.unsigned_abs() + 2 * q,
        }
    }
}

/// One eigenvalue of `2 dbar^* dbar` with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralLine {
    pub degree: i64,
    pub eigenvalue: Rational,
    pub q: u64,
    pub shift: u8,
    pub multiplicity: u64,
}

pub fn enumerate_spectrum(query: &SpectrumQuery, q_max: u64) -> Vec<SpectralLine> {
    (0..=q_max).map(|q| query.line(q)).collect()
}

/// The spectral line with eigenvalue `target`, if any.
///
/// Solves `(kappa/2)(t^2 + t|d+1|) = target` for `t = q + shift` exactly. A zero
/// target only matches the holomorphic line of a bundle of nonnegative degree.
pub fn eigenvalue_membership(
    query: &SpectrumQuery,
    target: &Rational,
) -> Result<Option<SpectralLine>> {
    if target.is_negative() {
        return Err(Error::Domain(format!(
            "{target} is negative and cannot be an eigenvalue"
        )));
    }
    let shift = query.shift();
    if target.is_zero() {
        return Ok((shift == 0).then(|| query.line(0)));
    }
    // t^2 + b t - c = 0 with c = 2 target / kappa
    let b = Rational::from(query.abs_degree_plus_one());
    let c = Rational::from(2) * target / &query.kappa;
    let disc = &b * &b + Rational::from(4) * &c;
    let Some(root) = disc.sqrt_exact()? else {
        return Ok(None);
    };
    let t = (root - b) / Rational::from(2);
    let Some(t) = t.to_i64().filter(|t| *t > 0) else {
        return Ok(None);
    };
    let t = t as u64;
    if t < shift {
        return Ok(None);
    }
    Ok(Some(query.line(t - shift)))
}

/// Dimension of the eigenspace at level `q`, recomputed from Riemann-Roch on
/// the bundle the eigensections are identified with: `K_P1^{-q} (x) K` for
/// `d >= 0` and `K_P1^{-q} (x) K^{-1}` for `d < 0`.
pub fn eigenspace_dimension_crosscheck(query: &SpectrumQuery, q: u64) -> u64 {
    let q = q as i64;
    let degree = if query.degree >= 0 {
        2 * q + query.degree
    } else {
        2 * q - query.degree
    };
    h0(&LineBundle::new(degree, 0)).expect("rational curve bundles are always resolvable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn query(d: i64, k: &str) -> SpectrumQuery {
        SpectrumQuery::new(d, q(k)).unwrap()
    }

    #[test]
    fn twisted_cubic_degree_zero() {
        let lines = enumerate_spectrum(&query(0, "8/3"), 2);
        let ev: Vec<_> = lines.iter().map(|l| l.eigenvalue.clone()).collect();
        assert_eq!(ev, vec![q("0"), q("8/3"), q("8")]);
        let mult: Vec<_> = lines.iter().map(|l| l.multiplicity).collect();
        assert_eq!(mult, vec![1, 3, 5]);
    }

    #[test]
    fn negative_degrees_shift() {
        let lines = enumerate_spectrum(&query(-1, "8"), 1);
        assert_eq!(lines[0].shift, 1);
        assert_eq!(
            (lines[0].eigenvalue.clone(), lines[0].multiplicity),
            (q("4"), 2)
        );
        assert_eq!(
            (lines[1].eigenvalue.clone(), lines[1].multiplicity),
            (q("16"), 4)
        );

        let line = query(-2, "4").line(0);
        assert_eq!((line.eigenvalue, line.multiplicity), (q("4"), 3));
    }

    #[test]
    fn membership_examples() {
        // mode m = -2 twists O(1) down to degree -1; degree -2 itself misses 4
        assert_eq!(
            eigenvalue_membership(&query(-2, "8"), &q("4")).unwrap(),
            None
        );
        let l = eigenvalue_membership(&query(-1, "8"), &q("4"))
            .unwrap()
            .unwrap();
        assert_eq!((l.q, l.shift, l.multiplicity), (0, 1, 2));
        let l = eigenvalue_membership(&query(0, "4"), &q("4"))
            .unwrap()
            .unwrap();
        assert_eq!((l.q, l.shift, l.multiplicity), (1, 0, 3));
        assert!(matches!(
            eigenvalue_membership(&query(6, "8/3"), &q("-4")),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            eigenvalue_membership(&query(0, "8"), &q("3")).unwrap(),
            None
        );
    }

    #[test]
    fn membership_scan_oracle() {
        // t^2 + t = 3/4 has no integer root: compare against a direct scan
        let qy = query(0, "8");
        assert!(enumerate_spectrum(&qy, 2)
            .iter()
            .all(|l| l.eigenvalue != q("3")));
    }

    #[test]
    fn zero_target() {
        let l = eigenvalue_membership(&query(3, "8"), &q("0"))
            .unwrap()
            .unwrap();
        assert_eq!((l.q, l.multiplicity), (0, 4));
        assert_eq!(
            eigenvalue_membership(&query(-3, "8"), &q("0")).unwrap(),
            None
        );
    }

    #[test]
    fn crosscheck_examples() {
        assert_eq!(eigenspace_dimension_crosscheck(&query(0, "8/3"), 2), 5);
        assert_eq!(eigenspace_dimension_crosscheck(&query(3, "8"), 0), 4);
        assert_eq!(eigenspace_dimension_crosscheck(&query(-1, "8"), 0), 2);
    }

    #[test]
    fn kappa_must_be_positive() {
        assert!(SpectrumQuery::new(0, q("0")).is_err());
        assert!(SpectrumQuery::new(0, q("-1")).is_err());
    }

    #[test]
    fn multiplicity_matches_riemann_roch_grid() {
        for kappa in ["8", "4", "8/3"] {
            for d in -10..=10 {
                let qy = query(d, kappa);
                for level in 0..=10 {
                    assert_eq!(
                        qy.line(level).multiplicity,
                        eigenspace_dimension_crosscheck(&qy, level)
                    );
                }
            }
        }
    }

    fn kappa_strategy() -> impl Strategy<Value = Rational> {
        (1i64..40, 1i64..12).prop_map(|(p, q)| Rational::frac(p, q))
    }

    proptest! {
        #[test]
        fn membership_inverts_enumeration(d in -30i64..30, kappa in kappa_strategy(), q_max in 0u64..12) {
            let qy = SpectrumQuery::new(d, kappa).unwrap();
            for line in enumerate_spectrum(&qy, q_max) {
                prop_assert_eq!(eigenvalue_membership(&qy, &line.eigenvalue).unwrap(), Some(line));
            }
        }

        #[test]
        fn strictly_increasing(d in -30i64..30, kappa in kappa_strategy()) {
            let lines = enumerate_spectrum(&SpectrumQuery::new(d, kappa).unwrap(), 15);
            prop_assert!(lines.windows(2).all(|w| w[0].eigenvalue < w[1].eigenvalue));
            prop_assert_eq!(lines[0].eigenvalue.is_zero(), d >= 0);
        }

        #[test]
        fn kappa_scaling(d in -30i64..30, kappa in kappa_strategy(), c in kappa_strategy()) {
            let base = enumerate_spectrum(&SpectrumQuery::new(d, kappa.clone()).unwrap(), 8);
            let scaled = enumerate_spectrum(&SpectrumQuery::new(d, &kappa * &c).unwrap(), 8);
            for (a, b) in base.iter().zip(&scaled) {
                prop_assert_eq!(&a.eigenvalue * &c, b.eigenvalue.clone());
                prop_assert_eq!(a.multiplicity, b.multiplicity);
            }
        }
    }
}
