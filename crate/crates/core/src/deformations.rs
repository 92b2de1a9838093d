//! Infinitesimal conical complex and conical Cayley deformations of complex
//! cones in `C^4`, counted on the complex link `Sigma` in CP^3.
//!
//! Conical complex deformations are holomorphic sections of the normal bundle
//! of `Sigma`, doubled for the real dimension. The extra Cayley deformations
//! come from Fourier modes `-4 < m < 0` with
//!
//! ```text
//! 2 dbar^* dbar v = -m (4 + m) v
//! ```
//!
//! on the twisted normal bundle. The twisted cubic does not split diagonally
//! and goes through [`twisted_cubic_coupled`] instead.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{scaled_to_integer, Rational};
use crate::error::{Error, Result};
use crate::profile::{ConeProfile, Connection};
use crate::riemann_roch::{h0, h0_sum, BundleSum, LineBundle};
use crate::spectrum::{eigenvalue_membership, SpectralLine, SpectrumQuery};

/// Assumption behind the coupled twisted cubic count.
pub const TWISTED_CUBIC_ASSUMPTION: &str =
    "g2(omega2 - i omega3) = a alpha1 for some complex a (adopted for the twisted cubic link)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mechanism {
    DiagonalLaplacian,
    CoupledAPlus,
    CoupledAMinus,
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mechanism::DiagonalLaplacian => "diagonal-laplacian",
            Mechanism::CoupledAPlus => "coupled-a-plus",
            Mechanism::CoupledAMinus => "coupled-a-minus",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraMode {
    pub mode: Rational,
    pub count: u64,
    pub mechanism: Mechanism,
}

/// Real dimensions of the infinitesimal conical deformation spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicalReport {
    pub complex_dim: u64,
    pub cayley_dim: u64,
    pub extra_modes: Vec<ExtraMode>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assumptions: Vec<String>,
}

/// Twice `h0` of the untwisted normal bundle.
pub fn conical_complex_dimension(profile: &ConeProfile) -> Result<u64> {
    let normal = BundleSum::from_degrees(&profile.degrees_at(0), profile.genus())?;
    Ok(2 * h0_sum(&normal)?)
}

pub fn conical_cayley_dimension(profile: &ConeProfile) -> Result<ConicalReport> {
    let complex_dim = conical_complex_dimension(profile)?;
    let k = profile.lattice_denominator() as i64;
    let mut extra: BTreeMap<(Rational, Mechanism), u64> = BTreeMap::new();
    let mut assumptions = Vec::new();

    match profile.connection() {
        Connection::Diagonal => {
            profile.require_diagonal()?;
            for n in 1 - 4 * k..0 {
                let m = profile.mode_value(n);
                let target = -(&m * (Rational::from(4) + &m));
                for d in profile.degrees_at(n) {
                    let query = SpectrumQuery::new(d, profile.kappa().clone())?;
                    if let Some(line) = eigenvalue_membership(&query, &target)? {
                        *extra
                            .entry((m.clone(), Mechanism::DiagonalLaplacian))
                            .or_default() += line.multiplicity;
                    }
                }
            }
        }
        Connection::TwistedCubic => {
            assumptions.push(TWISTED_CUBIC_ASSUMPTION.to_string());
            for n in 1 - 4 * k..0 {
                for c in twisted_cubic_coupled(&profile.mode_value(n))?.contributions {
                    if c.count > 0 {
                        *extra
                            .entry((c.mode.clone(), c.branch.mechanism()))
                            .or_default() += c.count;
                    }
                }
            }
        }
    }

    let extra_modes: Vec<ExtraMode> = extra
        .into_iter()
        .filter(|(_, count)| *count > 0)
        .map(|((mode, mechanism), count)| ExtraMode {
            mode,
            count,
            mechanism,
        })
        .collect();
    let cayley_dim = complex_dim + extra_modes.iter().map(|e| e.count).sum::<u64>();
    Ok(ConicalReport {
        complex_dim,
        cayley_dim,
        extra_modes,
        assumptions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn mechanism(self) -> Mechanism {
        match self {
            Branch::Plus => Mechanism::CoupledAPlus,
            Branch::Minus => Mechanism::CoupledAMinus,
        }
    }
}

/// The coupling `a` in `g2(omega2 - i omega3) = a alpha1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouplingParameter {
    pub value: Rational,
    pub branch: Branch,
}

fn require_cubic_lattice(m: &Rational) -> Result<()> {
    if scaled_to_integer(m, 3).is_none() {
        return Err(Error::Precondition(format!(
            "twisted cubic modes need 3m integral, got m = {m}"
        )));
    }
    Ok(())
}

/// Both roots `a+ = (6m + 16)/(4 - 3m)` and `a- = -2` of the coupling
/// equation; at `m = 4/3` only `a-` exists.
pub fn coupling_parameters(m: &Rational) -> Result<Vec<CouplingParameter>> {
    require_cubic_lattice(m)?;
    let minus = CouplingParameter {
        value: Rational::from(-2),
        branch: Branch::Minus,
    };
    let denom = Rational::from(4) - Rational::from(3) * m;
    if denom.is_zero() {
        return Ok(vec![minus]);
    }
    let numer = Rational::from(6) * m + Rational::from(16);
    if numer.is_zero() {
        return Err(Error::DegenerateCoupling(m.clone()));
    }
    Ok(vec![
        CouplingParameter {
            value: numer / denom,
            branch: Branch::Plus,
        },
        minus,
    ])
}

/// `(8/3 + m)(4/3 + 4/a - m)`, the `2 dbar^* dbar` eigenvalue forced on the
/// twisted section of degree `3m + 2`.
pub fn coupled_target(m: &Rational, a: &Rational) -> Result<Rational> {
    let four_over_a = Rational::from(4).checked_div(a)?;
    Ok((Rational::frac(8, 3) + m) * (Rational::frac(4, 3) + four_over_a - m))
}

/// Checks `(8/3 + m)(4/3 + 4/a - m) = (8/3 + a + m)(4/3 - m) - (4/3)(3m + 2)`.
pub fn coupling_consistent(m: &Rational, a: &Rational) -> Result<bool> {
    let lhs = coupled_target(m, a)?;
    let rhs = (Rational::frac(8, 3) + a + m) * (Rational::frac(4, 3) - m)
        - Rational::frac(4, 3) * (Rational::from(3) * m + Rational::from(2));
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoupledContribution {
    pub mode: Rational,
    pub branch: Branch,
    pub a: Rational,
    pub target: Rational,
    pub degree: i64,
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<SpectralLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoupledCount {
    pub mode: Rational,
    pub total: u64,
    pub contributions: Vec<CoupledContribution>,
}

/// Extra Cayley deformations of the twisted cubic cone at mode `m`.
///
/// A degenerate `a+` (at `m = -8/3`) drops out and only `a-` is counted.
pub fn twisted_cubic_coupled(m: &Rational) -> Result<CoupledCount> {
    let params = match coupling_parameters(m) {
        Err(Error::DegenerateCoupling(_)) => {
            vec![CouplingParameter {
                value: Rational::from(-2),
                branch: Branch::Minus,
            }]
        }
        other => other?,
    };
    let cubic = ConeProfile::c3();
    let degree = scaled_to_integer(m, 3).expect("checked by coupling_parameters") + 2;
    let query = SpectrumQuery::new(degree, cubic.kappa().clone())?;

    let mut contributions = Vec::new();
    for CouplingParameter { value: a, branch } in params {
        if !coupling_consistent(m, &a)? {
            return Err(Error::InconsistentCoupling {
                m: Box::new(m.clone()),
                a: Box::new(a),
            });
        }
        let target = coupled_target(m, &a)?;
        let (count, line) = if target.is_negative() {
            (0, None)
        } else if target.is_zero() {
            // harmonic, hence holomorphic: constants on degree 0
            (h0(&LineBundle::new(degree, cubic.genus()))?, None)
        } else {
            match eigenvalue_membership(&query, &target)? {
                Some(line) => (line.multiplicity, Some(line)),
                None => (0, None),
            }
        };
        contributions.push(CoupledContribution {
            mode: m.clone(),
            branch,
            a,
            target,
            degree,
            count,
            line,
        });
    }
    let total = contributions.iter().map(|c| c.count).sum();
    Ok(CoupledCount {
        mode: m.clone(),
        total,
        contributions,
    })
}
