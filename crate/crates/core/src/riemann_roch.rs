//! Holomorphic section counts for line bundles on compact Riemann surfaces.
//!
//! Only the cases Riemann-Roch settles on its own are answered: negative
//! degree, degree above `2g - 2`, and every degree on a rational curve. The
//! band `0 <= deg <= 2g - 2` on a curve of positive genus depends on the
//! bundle, not only its degree, and is reported as indeterminate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LineBundle {
    pub degree: i64,
    pub genus: u32,
}

impl LineBundle {
    pub fn new(degree: i64, genus: u32) -> Self {
        LineBundle { degree, genus }
    }

    /// Degree of the canonical bundle of the underlying curve.
    pub fn canonical_degree(genus: u32) -> i64 {
        2 * genus as i64 - 2
    }

    /// `E^* (x) K`, the Serre-dual partner.
    pub fn serre_dual(&self) -> LineBundle {
        LineBundle {
            degree: Self::canonical_degree(self.genus) - self.degree,
            genus: self.genus,
        }
    }
}

/// A direct sum of line bundles over one curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleSum {
    summands: Vec<LineBundle>,
}

impl BundleSum {
    pub fn new(summands: Vec<LineBundle>) -> Result<Self> {
        let first = summands
            .first()
            .ok_or_else(|| Error::Precondition("a bundle sum needs at least one summand".into()))?;
        if summands.iter().any(|s| s.genus != first.genus) {
            return Err(Error::Precondition(
                "summands of a bundle sum must share one genus".into(),
            ));
        }
        Ok(BundleSum { summands })
    }

    /// `O(d_1) + ... + O(d_n)` over a curve of genus `genus`.
    pub fn from_degrees(degrees: &[i64], genus: u32) -> Result<Self> {
        Self::new(degrees.iter().map(|&d| LineBundle::new(d, genus)).collect())
    }

    pub fn summands(&self) -> &[LineBundle] {
        &self.summands
    }

    pub fn genus(&self) -> u32 {
        self.summands[0].genus
    }

    pub fn serre_dual(&self) -> BundleSum {
        BundleSum {
            summands: self.summands.iter().map(LineBundle::serre_dual).collect(),
        }
    }
}

/// Dimension of the space of holomorphic sections.
pub fn h0(bundle: &LineBundle) -> Result<u64> {
    let LineBundle { degree, genus } = *bundle;
    if degree < 0 {
        return Ok(0);
    }
    if genus == 0 {
        return Ok(degree as u64 + 1);
    }
    if degree > LineBundle::canonical_degree(genus) {
        // h0(E^* K) vanishes by degree, leaving deg + 1 - g
        return Ok((degree + 1 - genus as i64) as u64);
    }
    Err(Error::Indeterminate { degree, genus })
}

pub fn h0_sum(sum: &BundleSum) -> Result<u64> {
    sum.summands.iter().map(h0).sum()
}

/// `sum_i (deg_i + 1 - g)`.
pub fn euler_characteristic(sum: &BundleSum) -> i64 {
    sum.summands
        .iter()
        .map(|s| s.degree + 1 - s.genus as i64)
        .sum()
}

/// Genus of a smooth complete intersection of surfaces of degrees `d1`, `d2`
/// in CP^3, by adjunction: `K = O(d1 + d2 - 4)` restricted to a curve of
/// degree `d1 d2`.
pub fn genus_complete_intersection(d1: u32, d2: u32) -> Result<u64> {
    let invalid = Error::InvalidCompleteIntersection { d1, d2 };
    if d1 == 0 || d2 == 0 {
        return Err(invalid);
    }
    let (a, b) = (d1 as i128, d2 as i128);
    let twice = 2 + a * b * (a + b - 4);
    if twice < 0 || twice % 2 != 0 {
        return Err(invalid);
    }
    u64::try_from(twice / 2).map_err(|_| invalid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_curve_counts() {
        assert_eq!(h0(&LineBundle::new(1, 0)), Ok(2));
        assert_eq!(h0(&LineBundle::new(-1, 0)), Ok(0));
        assert_eq!(h0(&LineBundle::new(5, 0)), Ok(6));
        assert_eq!(h0(&LineBundle::new(0, 0)), Ok(1));
    }

    #[test]
    fn higher_genus() {
        // K of the (4,3) complete intersection: degree 2g - 2 = 36
        assert_eq!(h0(&LineBundle::new(37, 19)), Ok(19));
        assert_eq!(h0(&LineBundle::new(-3, 19)), Ok(0));
        assert_eq!(
            h0(&LineBundle::new(36, 19)),
            Err(Error::Indeterminate {
                degree: 36,
                genus: 19
            })
        );
        assert!(h0(&LineBundle::new(0, 1)).is_err());
        assert_eq!(h0(&LineBundle::new(1, 1)), Ok(1));
    }

    #[test]
    fn sums() {
        let s = BundleSum::from_degrees(&[1, 1], 0).unwrap();
        assert_eq!(h0_sum(&s), Ok(4));
        assert_eq!(euler_characteristic(&s), 4);
        assert_eq!(h0_sum(&BundleSum::from_degrees(&[1, 2], 0).unwrap()), Ok(5));
        assert_eq!(
            h0_sum(&BundleSum::from_degrees(&[-3, -7], 0).unwrap()),
            Ok(0)
        );
        assert_eq!(
            euler_characteristic(&BundleSum::from_degrees(&[5, 5], 0).unwrap()),
            12
        );
        assert_eq!(
            euler_characteristic(&BundleSum::from_degrees(&[0], 19).unwrap()),
            -18
        );
        assert!(h0_sum(&BundleSum::from_degrees(&[3, 40], 19).unwrap()).is_err());
    }

    #[test]
    fn bundle_sum_invariants() {
        assert!(BundleSum::new(vec![]).is_err());
        assert!(BundleSum::new(vec![LineBundle::new(1, 0), LineBundle::new(1, 2)]).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_complete_intersection(4, 3), Ok(19));
        assert_eq!(genus_complete_intersection(2, 1), Ok(0));
        assert_eq!(genus_complete_intersection(2, 2), Ok(1));
        assert_eq!(genus_complete_intersection(3, 3), Ok(10));
        assert!(genus_complete_intersection(0, 3).is_err());
    }

    #[test]
    fn genus_by_degree_count() {
        // deg K = d1 d2 (d1 + d2 - 4) and deg K = 2g - 2
        for d1 in 1..8u32 {
            for d2 in 1..8u32 {
                let deg_k = (d1 * d2) as i64 * (d1 as i64 + d2 as i64 - 4);
                let g = genus_complete_intersection(d1, d2).unwrap() as i64;
                assert_eq!(2 * g - 2, deg_k);
            }
        }
    }

    proptest! {
        #[test]
        fn serre_duality_on_p1(d in -200i64..200) {
            let lhs = h0(&LineBundle::new(d, 0)).unwrap() as i64;
            let rhs = h0(&LineBundle::new(-2 - d, 0)).unwrap() as i64 + d + 1;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn monotone_in_degree(g in 0u32..6, d in -50i64..50) {
            let a = h0(&LineBundle::new(d, g));
            let b = h0(&LineBundle::new(d + 1, g));
            if let (Ok(a), Ok(b)) = (a, b) {
                prop_assert!(a <= b);
            }
        }

        #[test]
        fn euler_characteristic_is_h0_minus_dual(g in 0u32..4, degs in prop::collection::vec(-30i64..30, 1..5)) {
            let sum = BundleSum::from_degrees(&degs, g).unwrap();
            if let (Ok(a), Ok(b)) = (h0_sum(&sum), h0_sum(&sum.serre_dual())) {
                prop_assert_eq!(euler_characteristic(&sum), a as i64 - b as i64);
            }
        }

        #[test]
        fn genus_symmetric(d1 in 1u32..40, d2 in 1u32..40) {
            prop_assert_eq!(genus_complete_intersection(d1, d2), genus_complete_intersection(d2, d1));
        }
    }
}
