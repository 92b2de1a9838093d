//! Exact scalars: rationals, Q(sqrt 3), quadratic-surd weights and the
//! Bernoulli machinery behind zeta regularization.

mod bernoulli;
mod qsqrt3;
mod rational;
mod weight;

pub use bernoulli::{hurwitz_nonpositive, zeta_nonpositive, BernoulliTable};
pub use qsqrt3::QSqrt3;
pub(crate) use rational::scaled_to_integer;
pub use rational::Rational;
pub use weight::QuadraticWeight;
