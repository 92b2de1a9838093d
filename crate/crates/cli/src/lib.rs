//! Command-line front end for `cayley-core`.
//!
//! Every command builds a [`Report`] holding the echoed input, a SHA-256
//! digest of that input, and an exact payload. Reports print either as JSON
//! (`--json`) or as short plain text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use cayley_core::deformations::{conical_cayley_dimension, ConicalReport};
use cayley_core::eta::{eta_summary, expected_index, EtaSummary, IndexBreakdown, IndexQuery};
use cayley_core::frames::{FrameData, SecondFundamentalForm, StructureReport};
use cayley_core::riemann_roch::{euler_characteristic, genus_complete_intersection, BundleSum};
use cayley_core::spectrum::{
    eigenvalue_membership, enumerate_spectrum, SpectralLine, SpectrumQuery,
};
use cayley_core::weights::{
    enumerate_weights_with, ScanLimits, WeightEntry, WitnessKind, DEFAULT_Q_MAX,
};
use cayley_core::{ConeProfile, Rational};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Environment variable capping the spectral scans behind `weights`.
pub const QMAX_ENV: &str = "CAYLEY_WEIGHTS_QMAX";

#[derive(Debug, Parser)]
#[command(
    name = "cayley-weights",
    version,
    about = "Exact deformation counts for conical complex and Cayley cones"
)]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
#[group(required = true, multiple = false)]
pub struct ProfileSource {
    /// Path to a TOML cone profile.
    #[arg(long)]
    pub profile: Option<PathBuf>,
    /// One of the compiled-in profiles: c1, c2, c3.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conical complex and conical Cayley deformation dimensions.
    Dims {
        #[command(flatten)]
        source: ProfileSource,
    },
    /// Exceptional weights in a window, with multiplicities.
    Weights {
        #[command(flatten)]
        source: ProfileSource,
        #[arg(long, allow_hyphen_values = true)]
        min: Rational,
        #[arg(long, allow_hyphen_values = true)]
        max: Rational,
        /// Cap on spectral levels scanned per mode (default from CAYLEY_WEIGHTS_QMAX, else 64).
        #[arg(long)]
        qmax: Option<u64>,
    },
    /// Eta invariant of the weight spectrum and the index correction.
    Eta {
        #[command(flatten)]
        source: ProfileSource,
        /// Start of the polynomial tails.
        #[arg(long, default_value_t = 1)]
        k0: u64,
    },
    /// Index of dbar + dbar^* at a rate in (1, 2).
    Index {
        #[command(flatten)]
        source: ProfileSource,
        #[arg(long, allow_hyphen_values = true)]
        rate: Rational,
        /// Holomorphic Euler characteristic of the normal bundle; defaults to
        /// that of the untwisted summands.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
    },
    /// Genus of a complete intersection curve in CP^3.
    Genus {
        /// Degrees of the two surfaces, e.g. 4,3.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Spectrum of 2 dbar^* dbar on a line bundle over CP^1.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long)]
        kappa: Rational,
        /// Number of levels to list.
        #[arg(long, default_value_t = 10)]
        qmax: u64,
        /// Decide whether this value is an eigenvalue instead of listing.
        #[arg(long, allow_hyphen_values = true)]
        target: Option<Rational>,
    },
    /// Check the structure equations of the twisted cubic link frame.
    VerifyFrames,
    /// Print a compiled-in profile as TOML.
    Profile {
        #[arg(long)]
        emit: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cayley_core::Error),
}

impl CliError {
    /// 1 for a mathematical rejection, 2 for malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_mathematical_rejection() => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: BTreeMap<String, String>,
    /// SHA-256 of the command and canonical input.
    pub digest: String,
    pub result: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Dims(ConicalReport),
    Weights {
        entries: Vec<WeightEntry>,
    },
    Eta(EtaSummary),
    Index(IndexBreakdown),
    Genus {
        genus: u64,
    },
    Spectrum {
        lines: Vec<SpectralLine>,
    },
    Membership {
        line: Option<SpectralLine>,
    },
    VerifyFrames {
        report: StructureReport,
        second_fundamental_form: SecondFundamentalForm,
    },
    Profile {
        toml: String,
    },
}

fn load_profile(source: &ProfileSource) -> Result<ConeProfile, CliError> {
    match (&source.profile, &source.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.clone(),
                message: e.to_string(),
            })?;
            Ok(text.parse()?)
        }
        (None, Some(name)) => Ok(ConeProfile::builtin(name)?),
        _ => Err(CliError::Usage(
            "exactly one of --profile or --builtin is required".into(),
        )),
    }
}

/// Scan cap from the environment, falling back to the default.
pub fn qmax_from_env() -> Result<u64, CliError> {
    match std::env::var(QMAX_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{QMAX_ENV} must be a nonnegative integer, got '{v}'"
            ))
        }),
        Err(_) => Ok(DEFAULT_Q_MAX),
    }
}

struct Input(BTreeMap<String, String>);

impl Input {
    fn new() -> Self {
        Input(BTreeMap::new())
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.insert(key.into(), value.to_string());
        self
    }

    fn profile(self, p: &ConeProfile) -> Self {
        self.with("profile", p.name())
            .with("profile_toml", p.to_toml())
    }
}

fn digest(command: &str, input: &BTreeMap<String, String>) -> String {
    let canonical = serde_json::to_string(&(command, input)).expect("string map serializes");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

fn report(command: &str, input: Input, result: Payload) -> Report {
    let digest = digest(command, &input.0);
    Report {
        command: command.into(),
        input: input.0,
        digest,
        result,
    }
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    Ok(match command {
        Command::Dims { source } => {
            let p = load_profile(source)?;
            report(
                "dims",
                Input::new().profile(&p),
                Payload::Dims(conical_cayley_dimension(&p)?),
            )
        }
        Command::Weights {
            source,
            min,
            max,
            qmax,
        } => {
            let p = load_profile(source)?;
            let q_max = match qmax {
                Some(q) => *q,
                None => qmax_from_env()?,
            };
            let entries = enumerate_weights_with(&p, min, max, ScanLimits { q_max })?;
            let input = Input::new()
                .profile(&p)
                .with("min", min)
                .with("max", max)
                .with("qmax", q_max);
            report("weights", input, Payload::Weights { entries })
        }
        Command::Eta { source, k0 } => {
            let p = load_profile(source)?;
            report(
                "eta",
                Input::new().profile(&p).with("k0", k0),
                Payload::Eta(eta_summary(&p, *k0)?),
            )
        }
        Command::Index { source, rate, chi } => {
            let p = load_profile(source)?;
            let chi = match chi {
                Some(c) => *c,
                None => {
                    euler_characteristic(&BundleSum::from_degrees(&p.degrees_at(0), p.genus())?)
                }
            };
            let breakdown = expected_index(&IndexQuery {
                chi,
                rate: rate.clone(),
                profile: p.clone(),
            })?;
            report(
                "index",
                Input::new().profile(&p).with("rate", rate).with("chi", chi),
                Payload::Index(breakdown),
            )
        }
        Command::Genus { degrees } => {
            let [d1, d2] = degrees[..] else {
                return Err(CliError::Usage("--degrees takes exactly two values".into()));
            };
            let genus = genus_complete_intersection(d1, d2)?;
            report(
                "genus",
                Input::new().with("degrees", format!("{d1},{d2}")),
                Payload::Genus { genus },
            )
        }
        Command::Spectrum {
            degree,
            kappa,
            qmax,
            target,
        } => {
            let query = SpectrumQuery::new(*degree, kappa.clone())?;
            let input = Input::new().with("degree", degree).with("kappa", kappa);
            match target {
                Some(t) => {
                    let line = eigenvalue_membership(&query, t)?;
                    report(
                        "spectrum",
                        input.with("target", t),
                        Payload::Membership { line },
                    )
                }
                None => {
                    let lines = enumerate_spectrum(&query, *qmax);
                    report(
                        "spectrum",
                        input.with("qmax", qmax),
                        Payload::Spectrum { lines },
                    )
                }
            }
        }
        Command::VerifyFrames => {
            let frame = FrameData::twisted_cubic_link();
            let structure = frame.verify_structure_equations()?;
            let h = frame.second_fundamental_form()?;
            let input = Input::new().with("frame", "twisted_cubic_link");
            report(
                "verify-frames",
                input,
                Payload::VerifyFrames {
                    report: structure,
                    second_fundamental_form: h,
                },
            )
        }
        Command::Profile { emit } => {
            let p = ConeProfile::builtin(emit)?;
            report(
                "profile",
                Input::new().with("emit", emit),
                Payload::Profile { toml: p.to_toml() },
            )
        }
    })
}

/// Plain-text rendering.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match &report.result {
        Payload::Dims(r) => {
            let _ = writeln!(
                out,
                "conical Cayley: {}, conical complex: {}",
                r.cayley_dim, r.complex_dim
            );
            for e in &r.extra_modes {
                let _ = writeln!(out, "  m = {}: {} ({})", e.mode, e.count, e.mechanism);
            }
            for a in &r.assumptions {
                let _ = writeln!(out, "  assumes {a}");
            }
        }
        Payload::Weights { entries } => {
            if entries.is_empty() {
                out.push_str("no exceptional weights in window\n");
            }
            for e in entries {
                let _ = writeln!(
                    out,
                    "{}: {} (holomorphic {}, antiholomorphic {}, laplacian {})",
                    e.weight,
                    e.multiplicity,
                    e.count_of(WitnessKind::HolomorphicKernel),
                    e.count_of(WitnessKind::AntiholomorphicKernel),
                    e.count_of(WitnessKind::Laplacian),
                );
            }
        }
        Payload::Eta(s) => {
            let _ = writeln!(
                out,
                "eta(0) = {}, d(0) = {}, correction = {}",
                s.eta, s.d0, s.correction
            );
        }
        Payload::Index(b) => {
            let _ = writeln!(
                out,
                "index = {} (chi {}, crossed weights {}, correction {})",
                b.index, b.chi, b.crossed_total, b.correction
            );
        }
        Payload::Genus { genus } => {
            let _ = writeln!(out, "genus: {genus}");
        }
        Payload::Spectrum { lines } => {
            for l in lines {
                let _ = writeln!(
                    out,
                    "q = {}: eigenvalue {}, multiplicity {}",
                    l.q, l.eigenvalue, l.multiplicity
                );
            }
        }
        Payload::Membership { line } => match line {
            Some(l) => {
                let _ = writeln!(
                    out,
                    "eigenvalue at q = {}, multiplicity {}",
                    l.q, l.multiplicity
                );
            }
            None => out.push_str("not an eigenvalue\n"),
        },
        Payload::VerifyFrames { report, .. } => {
            for e in &report.equations {
                let _ = writeln!(
                    out,
                    "{}: {}",
                    e.name,
                    if e.passed { "PASS" } else { "FAIL" }
                );
                for r in &e.residuals {
                    let _ = writeln!(out, "  ({}, {}): {}", r.row, r.col, r.value);
                }
            }
        }
        Payload::Profile { toml } => out.push_str(toml),
    }
    out
}

pub fn render(report: &Report, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_text(report)
    }
}
