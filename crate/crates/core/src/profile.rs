//! Complex cones described through their complex link in CP^3.
//!
//! A profile records the genus and scalar curvature of the link, the lattice
//! of admissible Fourier modes `m = n / k` along the Reeb circle, and the
//! normal-bundle summands as degree families: at lattice index `n` the
//! `i`-th summand of `nu^{1,0} (x) O(m)` has degree `slope_i * n + offset_i`.
//!
//! Profiles are read from and written to TOML:
//!
//! ```toml
//! name = "c2"
//! genus = 0
//! kappa = "4"
//! lattice_denominator = 1
//! connection = "diagonal"
//!
//! [[summand]]
//! slope = 2
//! offset = 2
//!
//! [[summand]]
//! slope = 2
//! offset = 4
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeFamily {
    pub slope: i64,
    pub offset: i64,
}

impl DegreeFamily {
    pub fn degree_at(&self, n: i64) -> i64 {
        self.slope * n + self.offset
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Connection {
    /// The normal connection splits along the summands.
    Diagonal,
    /// The coupled normal connection of the twisted cubic link.
    TwistedCubic,
}

impl fmt::Display for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connection::Diagonal => "diagonal",
            Connection::TwistedCubic => "twisted_cubic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ProfileFile", into = "ProfileFile")]
pub struct ConeProfile {
    name: String,
    genus: u32,
    kappa: Rational,
    lattice_denominator: u32,
    summands: Vec<DegreeFamily>,
    connection: Connection,
}

impl ConeProfile {
    pub fn new(
        name: impl Into<String>,
        genus: u32,
        kappa: Rational,
        lattice_denominator: u32,
        summands: Vec<DegreeFamily>,
        connection: Connection,
    ) -> Result<Self> {
        let name = name.into();
        let invalid = |msg: String| Err(Error::InvalidProfile(format!("{name}: {msg}")));
        if !kappa.is_positive() {
            return invalid(format!("kappa must be positive, got {kappa}"));
        }
        if lattice_denominator == 0 {
            return invalid("lattice_denominator must be positive".into());
        }
        if summands.is_empty() {
            return invalid("at least one summand is required".into());
        }
        if let Some(s) = summands.iter().find(|s| s.slope < 1) {
            return invalid(format!("summand slope must be >= 1, got {}", s.slope));
        }
        if connection == Connection::TwistedCubic {
            let cubic = ConeProfile::c3();
            if genus != cubic.genus
                || kappa != cubic.kappa
                || lattice_denominator != cubic.lattice_denominator
                || summands != cubic.summands
            {
                return invalid(
                    "twisted_cubic connection is only defined for the twisted cubic link geometry"
                        .into(),
                );
            }
        }
        Ok(ConeProfile {
            name,
            genus,
            kappa,
            lattice_denominator,
            summands,
            connection,
        })
    }

    /// `C^2` in `C^4`: link `S^3`, complex link a line.
    pub fn c1() -> Self {
        ConeProfile {
            name: "c1".into(),
            genus: 0,
            kappa: Rational::from(8),
            lattice_denominator: 1,
            summands: vec![
                DegreeFamily {
                    slope: 1,
                    offset: 1
                };
                2
            ],
            connection: Connection::Diagonal,
        }
    }

    /// The quadric cone `z4 = 0, z1^2 + z2^2 + z3^2 = 0`: complex link a conic.
    pub fn c2() -> Self {
        ConeProfile {
            name: "c2".into(),
            genus: 0,
            kappa: Rational::from(4),
            lattice_denominator: 1,
            summands: vec![
                DegreeFamily {
                    slope: 2,
                    offset: 2,
                },
                DegreeFamily {
                    slope: 2,
                    offset: 4,
                },
            ],
            connection: Connection::Diagonal,
        }
    }

    /// The cone over `SU(2)/Z_3`: complex link the twisted cubic.
    pub fn c3() -> Self {
        ConeProfile {
            name: "c3".into(),
            genus: 0,
            kappa: Rational::frac(8, 3),
            lattice_denominator: 3,
            summands: vec![
                DegreeFamily {
                    slope: 1,
                    offset: 5
                };
                2
            ],
            connection: Connection::TwistedCubic,
        }
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "c1" => Ok(Self::c1()),
            "c2" => Ok(Self::c2()),
            "c3" => Ok(Self::c3()),
            other => Err(Error::InvalidProfile(format!(
                "unknown builtin profile '{other}' (expected c1, c2 or c3)"
            ))),
        }
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["c1", "c2", "c3"]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn lattice_denominator(&self) -> u32 {
        self.lattice_denominator
    }

    pub fn summands(&self) -> &[DegreeFamily] {
        &self.summands
    }

    pub fn connection(&self) -> Connection {
        self.connection
    }

    /// The Fourier mode `m = n / k`.
    pub fn mode_value(&self, n: i64) -> Rational {
        Rational::frac(n, self.lattice_denominator as i64)
    }

    /// Degrees of the twisted normal summands at lattice index `n`.
    pub fn degrees_at(&self, n: i64) -> Vec<i64> {
        self.summands.iter().map(|s| s.degree_at(n)).collect()
    }

    /// Guard for the diagonal spectral route.
    pub fn require_diagonal(&self) -> Result<()> {
        if self.connection != Connection::Diagonal {
            return Err(Error::NonDiagonalConnection(self.name.clone()));
        }
        if self.genus != 0 {
            return Err(Error::UnsupportedGenus(self.genus));
        }
        Ok(())
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&ProfileFile::from(self.clone())).expect("profile file serializes")
    }
}

impl FromStr for ConeProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        toml::from_str::<ConeProfile>(s)
            .map_err(|e| Error::InvalidProfile(describe_toml_error(s, &e)))
    }
}

fn describe_toml_error(src: &str, e: &toml::de::Error) -> String {
    let msg = e.message().trim().to_string();
    match e.span() {
        Some(span) => {
            let before = &src[..span.start.min(src.len())];
            let line = before.matches('\n').count() + 1;
            let col = before
                .rfind('\n')
                .map_or(before.len(), |i| before.len() - i - 1)
                + 1;
            format!("line {line}, column {col}: {msg}")
        }
        None => msg,
    }
}

/// On-disk shape of a profile.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileFile {
    name: String,
    genus: u32,
    kappa: Rational,
    lattice_denominator: u32,
    connection: Connection,
    #[serde(rename = "summand")]
    summands: Vec<SummandFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SummandFile {
    slope: i64,
    offset: i64,
}

impl TryFrom<ProfileFile> for ConeProfile {
    type Error = Error;

    fn try_from(f: ProfileFile) -> Result<Self> {
        ConeProfile::new(
            f.name,
            f.genus,
            f.kappa,
            f.lattice_denominator,
            f.summands
                .into_iter()
                .map(|s| DegreeFamily {
                    slope: s.slope,
                    offset: s.offset,
                })
                .collect(),
            f.connection,
        )
    }
}

impl From<ConeProfile> for ProfileFile {
    fn from(p: ConeProfile) -> Self {
        ProfileFile {
            name: p.name,
            genus: p.genus,
            kappa: p.kappa,
            lattice_denominator: p.lattice_denominator,
            connection: p.connection,
            summands: p
                .summands
                .into_iter()
                .map(|s| SummandFile {
                    slope: s.slope,
                    offset: s.offset,
                })
                .collect(),
        }
    }
}
