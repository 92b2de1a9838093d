use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::Result;

/// An element `a + b*sqrt(3)` of the field Q(sqrt 3).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct QSqrt3 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt3 { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        QSqrt3 {
            a,
            b: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn sqrt3() -> Self {
        QSqrt3 {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QSqrt3 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a^2 - 3 b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from(3) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm().inv()?;
        let c = self.conjugate();
        Ok(QSqrt3 {
            a: &c.a * &n,
            b: &c.b * &n,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QSqrt3 {
            a: &self.a * r,
            b: &self.b * r,
        }
    }
}

impl From<Rational> for QSqrt3 {
    fn from(a: Rational) -> Self {
        QSqrt3::rational(a)
    }
}

impl From<i64> for QSqrt3 {
    fn from(a: i64) -> Self {
        QSqrt3::rational(a.into())
    }
}

impl Add<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&QSqrt3> for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: &QSqrt3) -> QSqrt3 {
        let three = Rational::from(3);
        QSqrt3 {
            a: &self.a * &rhs.a + three * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: QSqrt3) -> QSqrt3 {
        &self + &rhs
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: QSqrt3) -> QSqrt3 {
        &self - &rhs
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: QSqrt3) -> QSqrt3 {
        &self * &rhs
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        -&self
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt3", self.b),
            (false, false) => write!(f, "{} + {}*sqrt3", self.a, self.b),
        }
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn two_over_sqrt3_rationalizes() {
        let two_over = QSqrt3::from(2).mul(QSqrt3::sqrt3().inv().unwrap());
        assert_eq!(two_over, QSqrt3::new(q("0"), q("2/3")));
        assert_eq!(&two_over * &two_over, QSqrt3::from(q("4/3")));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(QSqrt3::zero().inv().is_err());
    }
}
