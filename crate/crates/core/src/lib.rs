//! Differintegral engine: one operator `d^λ/dx^λ` for every real order λ.
//!
//! Positive orders differentiate, negative orders integrate and λ = 0 is the
//! identity. The crate provides
//!
//! * [`specfun`]: complex gamma, upper incomplete gamma, Kummer's function
//!   and the one-sided power `x₊^μ`,
//! * [`kernels`]: closed-form differintegrals of the step, the Dirac delta,
//!   the one-sided complex exponential and a normalized power-law family,
//! * [`transform`]: numerical Laplace transforms and the Bromwich-line
//!   evaluation of `s^λ G(s)`,
//! * [`oracles`]: Grünwald–Letnikov, Riemann–Liouville and finite-difference
//!   approximations used to cross-check everything above,
//! * [`cable`]: the semi-infinite RC cable driven by `V₀e^{jωt}` and its
//!   half-order current/voltage law.
//!
//! The crate is `no_std` and only needs `alloc` for sampled signals.

#![no_std]
// `!(x > 0.0)` guards are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cable;
mod error;
pub mod kernels;
pub mod oracles;
pub mod specfun;
mod sum;
pub mod transform;

pub use error::{Distribution, Error, Result};
pub use num_complex::Complex64;
pub use sum::CompensatedSum;

/// Complex scalar used throughout; the imaginary unit is written `j`.
pub type ComplexScalar = Complex64;
