//! Exceptional weights of `dbar + dbar^*` on a conically singular complex
//! surface, computed on the complex link.
//!
//! A weight `lambda` is exceptional when, for some Fourier mode `m`, there are
//! sections `v` of `nu^{1,0} (x) O(m)` and `w` of `Lambda^{0,1} (x) nu^{1,0} (x) O(m)` with
//!
//! ```text
//! dbar v   = (lambda + 3 + m) w
//! dbar^* w = (lambda - 1 - m) v / 2
//! ```
//!
//! Three disjoint sources contribute to the multiplicity `d(lambda)`:
//!
//! * `w = 0`: holomorphic `v` at `m = lambda - 1`;
//! * `v = 0`: antiholomorphic `w` at `m = -3 - lambda`, counted through the
//!   Serre-dual degree `2g - 2 - deg`;
//! * both nonzero: `2 dbar^* dbar v = (lambda - 1 - m)(lambda + 3 + m) v` with a
//!   positive right-hand side.
//!
//! Writing `(lambda - 1 - m)(lambda + 3 + m) = (lambda + 1)^2 - (m + 2)^2`, the
//! third source depends on `lambda` only through `(lambda + 1)^2`, so every
//! exceptional weight is `-1 +- sqrt(r)` for a rational `r`. Weights are
//! therefore carried as [`QuadraticWeight`]s and generated from the spectra,
//! never searched for on a grid.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{scaled_to_integer, QuadraticWeight, Rational};
use crate::error::{Error, Result};
use crate::profile::ConeProfile;
use crate::riemann_roch::{h0, LineBundle};
use crate::spectrum::{eigenvalue_membership, SpectralLine, SpectrumQuery};

/// Default cap on spectral levels scanned per mode and summand.
pub const DEFAULT_Q_MAX: u64 = 64;

/// Bounds on the internal spectral scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanLimits {
    pub q_max: u64,
}

impl Default for ScanLimits {
    fn default() -> Self {
        ScanLimits {
            q_max: DEFAULT_Q_MAX,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    HolomorphicKernel,
    AntiholomorphicKernel,
    Laplacian,
}

/// One contribution to a multiplicity, per lattice mode and summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Lattice index `n`; the Fourier mode is `m = n / k`.
    pub mode: i64,
    pub mode_value: Rational,
    pub kind: WitnessKind,
    pub summand: usize,
    /// Degree of the bundle the count was taken on.
    pub degree: i64,
    pub count: u64,
    /// `(lambda - 1 - m)(lambda + 3 + m)` for Laplacian witnesses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<SpectralLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub weight: QuadraticWeight,
    /// The weight as `p/q` when it is rational.
    pub value: Option<Rational>,
    pub multiplicity: u64,
    pub witnesses: Vec<Witness>,
}

impl WeightEntry {
    pub fn count_of(&self, kind: WitnessKind) -> u64 {
        self.witnesses
            .iter()
            .filter(|w| w.kind == kind)
            .map(|w| w.count)
            .sum()
    }
}

/// Lattice indices `n` whose mode `m = n/k` satisfies `|m + 2| < sqrt(r)`,
/// i.e. where `(lambda+1)^2 - (m+2)^2` is positive for `r = (lambda+1)^2`.
pub(crate) fn modes_below_radicand(k: u32, radicand: &Rational) -> Vec<i64> {
    let k = k as i64;
    let scaled = radicand * &Rational::from(k * k);
    let Some(j_max) = scaled.isqrt_strict_below() else {
        return Vec::new();
    };
    let j_max = j_max.to_i64().expect("mode range fits in i64");
    (-j_max..=j_max).map(|j| j - 2 * k).collect()
}

/// Lattice modes at which the Laplacian target for `lambda` is positive.
pub fn mode_range(profile: &ConeProfile, lambda: &Rational) -> Vec<i64> {
    let shifted = lambda + Rational::one();
    modes_below_radicand(profile.lattice_denominator(), &(&shifted * &shifted))
}

/// `d(lambda)` with its witnesses, for a rational weight.
pub fn weight_multiplicity(profile: &ConeProfile, lambda: &Rational) -> Result<WeightEntry> {
    weight_multiplicity_at(profile, &QuadraticWeight::from_rational(lambda))
}

/// `d(lambda)` for a weight `-1 +- sqrt(r)`, rational or not.
pub fn weight_multiplicity_at(
    profile: &ConeProfile,
    weight: &QuadraticWeight,
) -> Result<WeightEntry> {
    profile.require_diagonal()?;
    let k = profile.lattice_denominator();
    let genus = profile.genus();
    let value = weight.to_rational();
    let mut witnesses = Vec::new();

    if let Some(lambda) = &value {
        let mut kernel = |m: Rational, kind: WitnessKind| -> Result<()> {
            let Some(n) = scaled_to_integer(&m, k) else {
                return Ok(());
            };
            for (i, d) in profile.degrees_at(n).into_iter().enumerate() {
                let bundle = LineBundle::new(d, genus);
                let bundle = match kind {
                    WitnessKind::AntiholomorphicKernel => bundle.serre_dual(),
                    _ => bundle,
                };
                let count = h0(&bundle)?;
                if count > 0 {
                    witnesses.push(Witness {
                        mode: n,
                        mode_value: m.clone(),
                        kind,
                        summand: i,
                        degree: bundle.degree,
                        count,
                        target: None,
                        line: None,
                    });
                }
            }
            Ok(())
        };
        kernel(lambda - Rational::one(), WitnessKind::HolomorphicKernel)?;
        kernel(
            -Rational::from(3) - lambda,
            WitnessKind::AntiholomorphicKernel,
        )?;
    }

    let radicand = weight.radicand();
    for n in modes_below_radicand(k, radicand) {
        let m = profile.mode_value(n);
        let m2 = &m + Rational::from(2);
        let target = radicand - &m2 * &m2;
        for (i, d) in profile.degrees_at(n).into_iter().enumerate() {
            let query = SpectrumQuery::new(d, profile.kappa().clone())?;
            if let Some(line) = eigenvalue_membership(&query, &target)? {
                witnesses.push(Witness {
                    mode: n,
                    mode_value: m.clone(),
                    kind: WitnessKind::Laplacian,
                    summand: i,
                    degree: d,
                    count: line.multiplicity,
                    target: Some(target.clone()),
                    line: Some(line),
                });
            }
        }
    }

    let multiplicity = witnesses.iter().map(|w| w.count).sum();
    Ok(WeightEntry {
        weight: weight.clone(),
        value,
        multiplicity,
        witnesses,
    })
}

/// All exceptional weights in `[min, max]`, ascending, with multiplicities.
pub fn enumerate_weights(
    profile: &ConeProfile,
    min: &Rational,
    max: &Rational,
) -> Result<Vec<WeightEntry>> {
    enumerate_weights_with(profile, min, max, ScanLimits::default())
}

pub fn enumerate_weights_with(
    profile: &ConeProfile,
    min: &Rational,
    max: &Rational,
    limits: ScanLimits,
) -> Result<Vec<WeightEntry>> {
    if min > max {
        return Err(Error::EmptyWindow {
            min: Box::new(min.clone()),
            max: Box::new(max.clone()),
        });
    }
    profile.require_diagonal()?;
    let k = profile.lattice_denominator() as i64;
    let kq = Rational::from(k);
    let in_window =
        |w: &QuadraticWeight| w.cmp_rational(min).is_ge() && w.cmp_rational(max).is_le();

    let mut candidates: BTreeSet<QuadraticWeight> = BTreeSet::new();

    // kernel weights lambda = 1 + n/k and lambda = -3 - n/k
    let one = Rational::one();
    let three = Rational::from(3);
    for n in to_i64(((min - &one) * &kq).ceil())?..=to_i64(((max - &one) * &kq).floor())? {
        candidates.insert(QuadraticWeight::from_rational(
            &(profile.mode_value(n) + &one),
        ));
    }
    for n in to_i64(((-&three - max) * &kq).ceil())?..=to_i64(((-&three - min) * &kq).floor())? {
        candidates.insert(QuadraticWeight::from_rational(
            &(-&three - profile.mode_value(n)),
        ));
    }

    // Laplacian weights -1 +- sqrt((m+2)^2 + E) for positive eigenvalues E
    let shifted_bound = std::cmp::max((min + &one).abs(), (max + &one).abs());
    let bound_sq = &shifted_bound * &shifted_bound;
    for n in modes_below_radicand(k as u32, &bound_sq) {
        let m2 = profile.mode_value(n) + Rational::from(2);
        let base = &m2 * &m2;
        for d in profile.degrees_at(n) {
            let query = SpectrumQuery::new(d, profile.kappa().clone())?;
            let mut q = 0u64;
            loop {
                let line = query.line(q);
                let radicand = &base + &line.eigenvalue;
                if radicand > bound_sq {
                    break;
                }
                if q >= limits.q_max {
                    return Err(Error::ScanCapExceeded { cap: limits.q_max });
                }
                if line.eigenvalue.is_positive() {
                    for sign in [1, -1] {
                        let w = QuadraticWeight::new(sign, radicand.clone())?;
                        if in_window(&w) {
                            candidates.insert(w);
                        }
                    }
                }
                q += 1;
            }
        }
    }

    let mut out = Vec::new();
    for w in candidates.into_iter().filter(|w| in_window(w)) {
        let entry = weight_multiplicity_at(profile, &w)?;
        if entry.multiplicity > 0 {
            out.push(entry);
        }
    }
    Ok(out)
}

fn to_i64(n: num_bigint::BigInt) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::Precondition(format!("weight window too wide: {n}")))
}
