//! Zeta-regularized eta invariant of the weight spectrum and the index
//! formula for `dbar + dbar^*` on a conically singular complex surface.
//!
//! For an integral weight set whose multiplicities are eventually polynomial,
//! `d(k) - d(-k) = c(k)` for `k >= k0`, and
//!
//! ```text
//! eta(0) = sum_{0 < |lambda| < k0} sign(lambda) d(lambda) + sum_j c_j zeta(-j, k0)
//! ```
//!
//! where `c(k) = sum_j c_j k^j`. Everything stays in exact rationals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{hurwitz_nonpositive, Rational};
use crate::error::{Error, Result};
use crate::profile::ConeProfile;
use crate::weights::{enumerate_weights, weight_multiplicity, WeightEntry};

/// Largest tail degree tried by [`fit_multiplicity_profile_auto`].
pub const MAX_TAIL_DEGREE: usize = 8;

/// Number of extra points each tail fit must reproduce.
const VERIFICATION_POINTS: i64 = 3;

/// A polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    coefficients: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Rational::is_zero) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// The unique polynomial of degree `< points.len()` through `points`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        let mut acc = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // Lagrange basis polynomial for node i, built by repeated multiplication
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (p, b) in basis.iter().enumerate() {
                    next[p + 1] += b;
                    next[p] -= &(b * xj);
                }
                basis = next;
                denom *= &(xi - xj);
            }
            let scale = yi.checked_div(&denom)?;
            for (a, b) in acc.iter_mut().zip(&basis) {
                *a += b * &scale;
            }
        }
        Ok(Polynomial::new(acc))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coefficients.len().max(other.coefficients.len());
        let get = |p: &Polynomial, i: usize| p.coefficients.get(i).cloned().unwrap_or_default();
        Polynomial::new((0..n).map(|i| get(self, i) - get(other, i)).collect())
    }
}

/// Multiplicities split into a finite head and two polynomial tails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub k0: u64,
    /// `(lambda, d(lambda))` for integer `|lambda| < k0` with `d > 0`.
    pub head: Vec<(i64, u64)>,
    /// `d(lambda)` for integer `lambda >= k0`.
    pub tail_positive: Polynomial,
    /// `d(-k)` as a polynomial in `k = |lambda|`, for `k >= k0`.
    pub tail_negative: Polynomial,
}

impl MultiplicityProfile {
    pub fn multiplicity(&self, lambda: i64) -> Rational {
        let k0 = self.k0 as i64;
        if lambda >= k0 {
            self.tail_positive.eval(&lambda.into())
        } else if lambda <= -k0 {
            self.tail_negative.eval(&(-lambda).into())
        } else {
            self.head
                .iter()
                .find(|(w, _)| *w == lambda)
                .map_or(Rational::zero(), |(_, d)| (*d).into())
        }
    }

    /// `c(k) = d(k) - d(-k)` for `k >= k0`.
    pub fn asymmetry(&self) -> Polynomial {
        self.tail_positive.sub(&self.tail_negative)
    }
}

/// Fits polynomial tails of degree at most `degree_bound` starting at `k0`.
pub fn fit_multiplicity_profile(
    profile: &ConeProfile,
    degree_bound: usize,
    k0: u64,
) -> Result<MultiplicityProfile> {
    if k0 == 0 {
        return Err(Error::Precondition("k0 must be positive".into()));
    }
    profile.require_diagonal()?;
    let k0i = k0 as i64;
    let reach = k0i + degree_bound as i64 + VERIFICATION_POINTS;
    let entries = enumerate_weights(profile, &(-reach).into(), &reach.into())?;
    let d = integral_multiplicities(&entries)?;
    let at = |lambda: i64| d.get(&lambda).copied().unwrap_or(0);

    let head = (1 - k0i..k0i)
        .filter(|l| at(*l) > 0)
        .map(|l| (l, at(l)))
        .collect();
    let fit_tail = |sign: i64| -> Result<Polynomial> {
        let sample = |k: i64| (Rational::from(k), Rational::from(at(sign * k)));
        let nodes: Vec<_> = (k0i..=k0i + degree_bound as i64).map(sample).collect();
        let poly = Polynomial::interpolate(&nodes)?;
        let last = k0i + degree_bound as i64;
        for k in last + 1..=last + VERIFICATION_POINTS {
            let (x, y) = sample(k);
            if poly.eval(&x) != y {
                return Err(Error::NotPolynomial(degree_bound));
            }
        }
        Ok(poly)
    };
    Ok(MultiplicityProfile {
        k0,
        head,
        tail_positive: fit_tail(1)?,
        tail_negative: fit_tail(-1)?,
    })
}

/// Tries tail degrees `0..=MAX_TAIL_DEGREE` and keeps the first that verifies.
pub fn fit_multiplicity_profile_auto(
    profile: &ConeProfile,
    k0: u64,
) -> Result<MultiplicityProfile> {
    for degree_bound in 0..=MAX_TAIL_DEGREE {
        match fit_multiplicity_profile(profile, degree_bound, k0) {
            Err(Error::NotPolynomial(_)) => continue,
            other => return other,
        }
    }
    Err(Error::NotPolynomial(MAX_TAIL_DEGREE))
}

fn integral_multiplicities(entries: &[WeightEntry]) -> Result<BTreeMap<i64, u64>> {
    entries
        .iter()
        .map(|e| match e.value.as_ref().and_then(Rational::to_i64) {
            Some(l) => Ok((l, e.multiplicity)),
            None => Err(Error::IrrationalWeights(e.weight.to_string())),
        })
        .collect()
}

pub fn eta_at_zero(mp: &MultiplicityProfile) -> Result<Rational> {
    let head: Rational = mp
        .head
        .iter()
        .map(|&(l, d)| Rational::from(l.signum()) * Rational::from(d))
        .sum();
    let start = Rational::from(mp.k0);
    let mut tail = Rational::zero();
    for (j, c) in mp.asymmetry().coefficients().iter().enumerate() {
        if !c.is_zero() {
            tail += c * &hurwitz_nonpositive(j, &start)?;
        }
    }
    Ok(head + tail)
}

/// `d(0)`, `eta(0)` and the boundary correction `(d(0) + eta(0)) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaSummary {
    pub d0: u64,
    pub eta: Rational,
    pub correction: Rational,
    pub multiplicities: MultiplicityProfile,
}

pub fn eta_summary(profile: &ConeProfile, k0: u64) -> Result<EtaSummary> {
    let multiplicities = fit_multiplicity_profile_auto(profile, k0)?;
    let eta = eta_at_zero(&multiplicities)?;
    let d0 = weight_multiplicity(profile, &Rational::zero())?.multiplicity;
    let correction = (Rational::from(d0) + &eta) / Rational::from(2);
    Ok(EtaSummary {
        d0,
        eta,
        correction,
        multiplicities,
    })
}

/// `(d(0) + eta(0)) / 2`.
pub fn index_correction(profile: &ConeProfile) -> Result<Rational> {
    Ok(eta_summary(profile, 1)?.correction)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexQuery {
    /// Holomorphic Euler characteristic of the normal bundle.
    pub chi: i64,
    pub rate: Rational,
    pub profile: ConeProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexBreakdown {
    pub chi: i64,
    pub rate: Rational,
    /// Exceptional weights strictly between 0 and the rate.
    pub crossed: Vec<WeightEntry>,
    pub crossed_total: u64,
    pub correction: Rational,
    pub index: Rational,
}

/// `ind = chi - sum_{lambda in (0, rate)} d(lambda) - (d(0) + eta(0)) / 2`, for a
/// rate in `(1, 2)`.
///
/// An exceptional rate is reported as non-Fredholm before the range is checked.
pub fn expected_index(query: &IndexQuery) -> Result<IndexBreakdown> {
    let (one, two) = (Rational::one(), Rational::from(2));
    if weight_multiplicity(&query.profile, &query.rate)?.multiplicity > 0 {
        return Err(Error::NonFredholm(query.rate.clone()));
    }
    if query.rate <= one || query.rate >= two {
        return Err(Error::Precondition(format!(
            "rate must lie in (1, 2), got {}",
            query.rate
        )));
    }
    index_at_rate(&query.profile, query.chi, &query.rate)
}

/// The index formula at any positive non-exceptional rate.
pub fn index_at_rate(profile: &ConeProfile, chi: i64, rate: &Rational) -> Result<IndexBreakdown> {
    if !rate.is_positive() {
        return Err(Error::Precondition(format!(
            "rate must be positive, got {rate}"
        )));
    }
    if weight_multiplicity(profile, rate)?.multiplicity > 0 {
        return Err(Error::NonFredholm(rate.clone()));
    }
    let crossed: Vec<WeightEntry> = enumerate_weights(profile, &Rational::zero(), rate)?
        .into_iter()
        .filter(|e| {
            e.weight.cmp_rational(&Rational::zero()).is_gt() && e.weight.cmp_rational(rate).is_lt()
        })
        .collect();
    let crossed_total: u64 = crossed.iter().map(|e| e.multiplicity).sum();
    let correction = index_correction(profile)?;
    let index = Rational::from(chi) - Rational::from(crossed_total) - &correction;
    Ok(IndexBreakdown {
        chi,
        rate: rate.clone(),
        crossed,
        crossed_total,
        correction,
        index,
    })
}
