//! Complex special functions behind the closed-form kernels.
//!
//! Every complex power and logarithm uses the principal branch: the cut lies
//! on the negative real axis and `arg z ∈ (−π, π]`. A negative real `z` whose
//! imaginary part is `-0.0` is treated as lying on the upper lip of the cut.

mod gamma;
mod incgamma;
mod kummer;

pub use gamma::{gamma, gamma_real, rgamma, sin_pi};
pub use incgamma::{upper_incomplete_gamma, SERIES_SWITCHOVER_MIN};
pub use kummer::{kummer_phi, KUMMER_SERIES_RADIUS};

use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use crate::{Error, Result};

/// Maximum number of series terms or continued-fraction levels.
pub const MAX_TERMS: usize = 10_000;

/// Relative size of the last term at which a series is considered converged.
pub const TAIL_TOL: f64 = 1e-15;

/// Principal argument in `(−π, π]`.
pub fn principal_arg(z: Complex64) -> f64 {
    if z.im == 0.0 {
        if z.re < 0.0 {
            core::f64::consts::PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    }
}

/// Principal logarithm `ln|z| + j·arg z`.
pub fn principal_ln(z: Complex64) -> Complex64 {
    Complex64::new(z.norm().ln(), principal_arg(z))
}

/// Principal power `z^p = exp(p·ln z)`.
///
/// At the origin this returns `0` for `p > 0`, `1` for `p = 0` and an
/// infinite real value for `p < 0`.
pub fn principal_pow(z: Complex64, p: f64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return if p > 0.0 {
            Complex64::new(0.0, 0.0)
        } else if p == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        };
    }
    if p == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let ln = principal_ln(z);
    Complex64::from_polar((p * ln.re).exp(), p * ln.im)
}

/// One-sided power `x₊^μ`: `x^μ` on `x > 0` and `0` on `x < 0`.
///
/// At `x = 0` the value is `0` for `μ > 0`, `1` for `μ = 0`, and an error for
/// `μ < 0` where the function is unbounded.
pub fn power_plus(x: f64, mu: f64) -> Result<f64> {
    if x.is_nan() || mu.is_nan() {
        return Err(Error::Domain("power_plus argument is NaN"));
    }
    if x > 0.0 {
        Ok(x.powf(mu))
    } else if x < 0.0 || mu > 0.0 {
        Ok(0.0)
    } else if mu == 0.0 {
        Ok(1.0)
    } else {
        Err(Error::SingularAtOrigin { mu })
    }
}
