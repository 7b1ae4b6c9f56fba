//! Exact scalars: rationals, Gaussian rationals, Gamma ratios at rational
//! arguments and the small period ring used by the integrators.

mod gamma;
mod gaussian;
mod period;
mod rational;

pub use gamma::{beta_quotient, gamma_half, gamma_ratio, PoleError};
pub use gaussian::{GaussianRational, Scalar};
pub use period::Period;
pub use rational::{ParseRationalError, Rational};
