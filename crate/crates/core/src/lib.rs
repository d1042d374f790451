//! Sums over the zeros of entire special functions.
//!
//! Each supported family (the sinc function, Bessel and Airy functions, their
//! q-analogues, the Riemann Ξ function and Dirichlet Ξ functions for real
//! primitive characters) is described by the Taylor coefficients of a
//! genus-zero product `Π (1 - z λ_k) = Σ (-1)^n σ_n z^n`. From the `σ_n` the
//! [`newton`] module produces the power sums `s_n = Σ λ_k^n`, both through
//! Newton's recurrence and through an independent Hessenberg determinant.
//! The [`oracle`] module locates the actual zeros and checks the results.
//!
//! All arithmetic runs in [`Real`], an extended-precision float with a
//! configurable number of decimal digits.

pub mod error;
pub mod newton;
pub mod oracle;
pub mod precision;
pub mod series;
pub mod zeta;

pub use error::{Error, Result};
pub use newton::{CoefficientSeries, Family, Method, PowerSumReport, Source};
pub use precision::{Precision, Real};
