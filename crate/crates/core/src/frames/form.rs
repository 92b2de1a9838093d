use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::arith::QSqrt3;
use crate::error::{Error, Result};

/// Rank of the coframe.
pub const RANK: usize = 3;

/// A constant-coefficient form `sum_I c_I omega_I` on a three-dimensional
/// Lie group, with `omega_I` keyed by a bitmask of the indices in `I`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExteriorForm {
    degree: usize,
    terms: BTreeMap<u8, QSqrt3>,
}

fn indices(mask: u8) -> impl Iterator<Item = usize> {
    (0..RANK).filter(move |i| mask & (1 << i) != 0)
}

/// Sign of the shuffle that sorts `omega_a ^ omega_b` into increasing order.
fn shuffle_sign(a: u8, b: u8) -> i64 {
    let inversions: u32 = indices(b).map(|j| (a >> (j + 1)).count_ones()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl ExteriorForm {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= RANK, "form degree {degree} exceeds {RANK}");
        ExteriorForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: impl Into<QSqrt3>) -> Self {
        Self::from_terms(0, [(0u8, c.into())])
    }

    /// The coframe element `omega_i`, `i` in `1..=3`.
    pub fn generator(i: usize) -> Self {
        assert!((1..=RANK).contains(&i), "no coframe element omega_{i}");
        Self::from_terms(1, [(1u8 << (i - 1), QSqrt3::one())])
    }

    /// `c omega_{i1} ^ ... ^ omega_{ip}` for strictly increasing 1-based indices.
    pub fn monomial(c: impl Into<QSqrt3>, idx: &[usize]) -> Self {
        assert!(
            idx.windows(2).all(|w| w[0] < w[1]),
            "indices must be increasing"
        );
        let mask = idx.iter().fold(0u8, |m, &i| {
            assert!((1..=RANK).contains(&i));
            m | 1 << (i - 1)
        });
        Self::from_terms(idx.len(), [(mask, c.into())])
    }

    fn from_terms(degree: usize, terms: impl IntoIterator<Item = (u8, QSqrt3)>) -> Self {
        let mut out = Self::zero(degree);
        for (mask, c) in terms {
            debug_assert_eq!(mask.count_ones() as usize, degree);
            out.accumulate(mask, &c);
        }
        out
    }

    fn accumulate(&mut self, mask: u8, c: &QSqrt3) {
        let entry = self.terms.entry(mask).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `omega_I` for 1-based increasing indices.
    pub fn coefficient(&self, idx: &[usize]) -> QSqrt3 {
        let mask = idx.iter().fold(0u8, |m, &i| m | 1 << (i - 1));
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &QSqrt3)> {
        self.terms
            .iter()
            .map(|(m, c)| (indices(*m).map(|i| i + 1).collect(), c))
    }

    pub fn scale(&self, c: &QSqrt3) -> Self {
        Self::from_terms(self.degree, self.terms.iter().map(|(m, x)| (*m, x * c)))
    }

    pub fn wedge(&self, other: &ExteriorForm) -> Result<Self> {
        if self.degree + other.degree > RANK {
            return Err(Error::DegreeOverflow(self.degree, other.degree));
        }
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a & b == 0 {
                    let c = (x * y).scale(&shuffle_sign(*a, *b).into());
                    out.accumulate(a | b, &c);
                }
            }
        }
        Ok(out)
    }

    fn check_degree(&self, other: &ExteriorForm) {
        assert_eq!(
            self.degree, other.degree,
            "adding forms of different degree"
        );
    }
}

impl Add<&ExteriorForm> for &ExteriorForm {
    type Output = ExteriorForm;
    fn add(self, rhs: &ExteriorForm) -> ExteriorForm {
        self.check_degree(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(*m, c);
        }
        out
    }
}

impl Sub<&ExteriorForm> for &ExteriorForm {
    type Output = ExteriorForm;
    fn sub(self, rhs: &ExteriorForm) -> ExteriorForm {
        self + &-rhs
    }
}

impl Neg for &ExteriorForm {
    type Output = ExteriorForm;
    fn neg(self) -> ExteriorForm {
        self.scale(&QSqrt3::from(-1))
    }
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mask, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let basis: Vec<String> = indices(*mask).map(|j| format!("w{}", j + 1)).collect();
            let both = !c.a.is_zero() && !c.b.is_zero();
            match (basis.is_empty(), both) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "({c})*{}", basis.join("^"))?,
                (false, false) => write!(f, "{c}*{}", basis.join("^"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree, self)
    }
}
