//! Exact exterior calculus on a three-dimensional Lie group with coefficients
//! in `Q(sqrt 3)`, and the second structure equations of an associative
//! three-fold in `R^7` along the twisted cubic link.

// index loops mirror the tensor notation
#![allow(clippy::needless_range_loop)]

mod form;
mod link;
mod matrix;
mod structure;

pub use form::{ExteriorForm, RANK};
pub use link::{
    two_over_sqrt3, EquationCheck, FrameData, ResidualEntry, SecondFundamentalForm,
    StructureReport, NORMAL_RANK,
};
pub use matrix::{braces, bracket, bracket_pm, MatrixForm};
pub use structure::StructureConstants;
