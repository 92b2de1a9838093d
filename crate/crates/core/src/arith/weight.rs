use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A weight of the form `-1 + sign * sqrt(radicand)`.
///
/// Radicand-zero weights always carry sign `+1`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticWeight {
    sign: i8,
    radicand: Rational,
}

impl QuadraticWeight {
    pub fn new(sign: i8, radicand: Rational) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Domain(format!(
                "weight sign must be +1 or -1, got {sign}"
            )));
        }
        if radicand.is_negative() {
            return Err(Error::Domain(format!("negative radicand {radicand}")));
        }
        let sign = if radicand.is_zero() { 1 } else { sign };
        Ok(QuadraticWeight { sign, radicand })
    }

    /// The weight equal to the rational `value`.
    pub fn from_rational(value: &Rational) -> Self {
        let shifted = value + Rational::one();
        let sign = if shifted.is_negative() { -1 } else { 1 };
        QuadraticWeight {
            sign,
            radicand: &shifted * &shifted,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `(lambda + 1)^2`.
    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    /// `lambda + 1` when it is rational.
    pub fn shifted_rational(&self) -> Option<Rational> {
        let root = self.radicand.sqrt_exact().ok()??;
        Some(if self.sign < 0 { -root } else { root })
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.shifted_rational().map(|s| s - Rational::one())
    }

    pub fn is_rational(&self) -> bool {
        self.to_rational().is_some()
    }

    /// Compares against a rational without leaving the exact field.
    pub fn cmp_rational(&self, other: &Rational) -> Ordering {
        self.cmp(&QuadraticWeight::from_rational(other))
    }

    /// Compares the signed roots `s1*sqrt(r1)` and `s2*sqrt(r2)`.
    fn cmp_shifted(&self, other: &Self) -> Ordering {
        let signed = |w: &Self| if w.radicand.is_zero() { 0 } else { w.sign };
        let (a, b) = (signed(self), signed(other));
        if a != b {
            return a.cmp(&b);
        }
        match a {
            0 => Ordering::Equal,
            1 => self.radicand.cmp(&other.radicand),
            _ => other.radicand.cmp(&self.radicand),
        }
    }
}

impl Ord for QuadraticWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_shifted(other)
    }
}

impl PartialOrd for QuadraticWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuadraticWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(v) => write!(f, "{v}"),
            None => {
                let op = if self.sign > 0 { '+' } else { '-' };
                write!(f, "-1 {op} sqrt({})", self.radicand)
            }
        }
    }
}

impl fmt::Debug for QuadraticWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRecord {
    base: String,
    sign: i8,
    radicand: Rational,
}

impl Serialize for QuadraticWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightRecord {
            base: "-1".into(),
            sign: self.sign,
            radicand: self.radicand.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadraticWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = WeightRecord::deserialize(d)?;
        if rec.base != "-1" {
            return Err(serde::de::Error::custom(format!(
                "weight base must be \"-1\", got {:?}",
                rec.base
            )));
        }
        QuadraticWeight::new(rec.sign, rec.radicand).map_err(serde::de::Error::custom)
    }
}
