use thiserror::Error;

use crate::arith::Rational;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("indeterminate: requires bundle-specific data (degree {degree}, genus {genus})")]
    Indeterminate { degree: i64, genus: u32 },

    #[error("not a valid smooth complete intersection input: degrees ({d1}, {d2})")]
    InvalidCompleteIntersection { d1: u32, d2: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("empty weight window [{min}, {max}]")]
    EmptyWindow {
        min: Box<Rational>,
        max: Box<Rational>,
    },

    #[error("use twisted_cubic solver: connection on profile '{0}' is not diagonal")]
    NonDiagonalConnection(String),

    #[error("unsupported: spectral counting needs a rational complex link, got genus {0}")]
    UnsupportedGenus(u32),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("eta regularization unsupported for irrational weight sets (found {0})")]
    IrrationalWeights(String),

    #[error("multiplicity sequence not eventually polynomial at this degree bound ({0})")]
    NotPolynomial(usize),

    #[error("non-Fredholm rate: {0} is an exceptional weight")]
    NonFredholm(Rational),

    #[error("degenerate coupling at m = {0}: a+ vanishes")]
    DegenerateCoupling(Rational),

    #[error("coupling parameter a = {a} fails the consistency identity at m = {m}")]
    InconsistentCoupling { m: Box<Rational>, a: Box<Rational> },

    #[error("spectral scan cap of {cap} lines exceeded; raise CAYLEY_WEIGHTS_QMAX")]
    ScanCapExceeded { cap: u64 },

    #[error("form degree overflow: {0} + {1} > 3")]
    DegreeOverflow(usize, usize),

    #[error("wrong arity: expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("second fundamental form is not symmetric at h^{a}_{j}{k}")]
    AsymmetricSecondFundamentalForm { a: usize, j: usize, k: usize },

    #[error("structure equation {0} has a nonzero residual")]
    StructureEquation(String),
}

impl Error {
    /// Whether the error is a rejection of well-formed input on mathematical
    /// grounds, as opposed to malformed input.
    pub fn is_mathematical_rejection(&self) -> bool {
        !matches!(
            self,
            Error::Precondition(_)
                | Error::EmptyWindow { .. }
                | Error::InvalidProfile(_)
                | Error::Arity { .. }
                | Error::Domain(_)
                | Error::InvalidCompleteIntersection { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
