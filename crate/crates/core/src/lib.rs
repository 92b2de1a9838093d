//! Exact computations for the deformation theory of conical complex and Cayley
//! cones in `C^4`: exceptional weights of `dbar + dbar^*`, the eta invariant of
//! the weight spectrum, the conical index, and the structure equations of the
//! twisted cubic link.
//!
//! Every quantity is a rational, an element of `Q(sqrt 3)`, or a weight of the
//! form `-1 +- sqrt(r)` with rational `r`. No floating point is involved.

pub mod arith;
pub mod deformations;
pub mod error;
pub mod eta;
pub mod frames;
pub mod profile;
pub mod riemann_roch;
pub mod spectrum;
pub mod weights;

pub use arith::{QSqrt3, QuadraticWeight, Rational};
pub use error::{Error, Result};
pub use profile::{ConeProfile, Connection, DegreeFamily};
