use core::fmt;

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Symbolic tag for results that are distributions rather than functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    /// `δ^{(n)}(x)`; `n = 0` is the delta itself.
    DiracDerivative(u32),
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::DiracDerivative(0) => write!(f, "δ(x)"),
            Distribution::DiracDerivative(n) => write!(f, "δ^({n})(x)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at {0}")]
    Pole(i64),
    #[error("no convergence after {iterations} iterations (partial value {partial}, tail {bound:e})")]
    NoConvergence {
        iterations: usize,
        partial: Complex64,
        bound: f64,
    },
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("x₊^{mu} is singular at the origin")]
    SingularAtOrigin { mu: f64 },
    #[error("result is the distribution {0}, not a pointwise function")]
    Distributional(Distribution),
    #[error("integration constants only apply to negative integer orders (got order {order}, {supplied} constants)")]
    ConstantsRejected { order: f64, supplied: usize },
    #[error("complex exponential with b = 0 is the step; use the step kernel")]
    DegenerateFrequency,
    #[error("Bromwich line Re s = {a} must lie right of the image abscissa {abscissa}")]
    Contour { a: f64, abscissa: f64 },
    #[error("Re s = {0} is outside the region of convergence")]
    Region(f64),
    #[error("order {order} is too large for an image decaying like |s|^-{decay} (cap {cap})")]
    OrderTooLarge { order: f64, decay: f64, cap: f64 },
    #[error("grid too coarse: {0}")]
    Resolution(&'static str),
    #[error("invalid configuration: {0}")]
    Config(&'static str),
}
