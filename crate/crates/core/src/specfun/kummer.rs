use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use super::{gamma, principal_pow, upper_incomplete_gamma, MAX_TERMS, TAIL_TOL};
use crate::{Error, Result};

/// Radius beyond which `Φ(1, b, z)` is evaluated through the incomplete gamma
/// function instead of the power series. Below it the series loses at most
/// `e^{|z|}·ε ≈ 4e-11` to cancellation.
pub const KUMMER_SERIES_RADIUS: f64 = 12.0;

/// Kummer's confluent hypergeometric function
/// `Φ(a, b, z) = Σ (a)_k z^k / ((b)_k k!)`.
///
/// For `a = 1` and `|z| > KUMMER_SERIES_RADIUS` the value comes from
/// `Φ(1, 1−λ, z) = z^λ e^z [Γ(1−λ) + λ Γ(−λ, z)]` with `λ = 1 − b`.
pub fn kummer_phi(a: f64, b: f64, z: Complex64) -> Result<Complex64> {
    if !(a.is_finite() && b.is_finite() && z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("Kummer function argument is not finite"));
    }
    if b <= 0.0 && b == b.floor() {
        return Err(Error::Domain("Kummer b parameter is a non-positive integer"));
    }
    if a == 1.0 && z.norm() > KUMMER_SERIES_RADIUS {
        return via_incomplete_gamma(b, z);
    }
    series(a, b, z)
}

fn series(a: f64, b: f64, z: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= z * ((a + kf) / ((b + kf) * (kf + 1.0)));
        sum += term;
        if term.norm() <= TAIL_TOL * sum.norm() && kf + 1.0 > z.norm() {
            return Ok(sum);
        }
        // terminating series for non-positive integer a
        if term.re == 0.0 && term.im == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_TERMS,
        partial: sum,
        bound: term.norm(),
    })
}

fn via_incomplete_gamma(b: f64, z: Complex64) -> Result<Complex64> {
    let lambda = 1.0 - b;
    let bracket = gamma(Complex64::new(b, 0.0))? + lambda * upper_incomplete_gamma(-lambda, z)?;
    Ok(principal_pow(z, lambda) * z.exp() * bracket)
}
