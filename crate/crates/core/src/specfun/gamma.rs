use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use crate::{Error, Result};

// Lanczos approximation with g = 7 and nine coefficients (Godfrey's set, as
// tabulated in Numerical Recipes 3rd ed. and Wikipedia's "Lanczos
// approximation"). Relative error is below 2e-15 on Re z ≥ 1/2.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)] // digits as published
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    SQRT_2PI * ((z + 0.5) * t.ln() - t).exp() * series
}

fn reduce_half_period(x: f64) -> f64 {
    // x - 2·round(x/2), in [-1, 1]
    x - 2.0 * (0.5 * x).round()
}

fn sin_pi_real(x: f64) -> f64 {
    if x == x.floor() {
        return 0.0;
    }
    let r = reduce_half_period(x);
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

fn cos_pi_real(x: f64) -> f64 {
    let a = reduce_half_period(x).abs();
    if a == 0.5 {
        0.0
    } else if a < 0.5 {
        (PI * a).cos()
    } else {
        -(PI * (1.0 - a)).cos()
    }
}

/// `sin(πz)`, exact zero at real integers.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (y_cosh, y_sinh) = ((PI * z.im).cosh(), (PI * z.im).sinh());
    Complex64::new(sin_pi_real(z.re) * y_cosh, cos_pi_real(z.re) * y_sinh)
}

fn pole_at(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()).then_some(z.re as i64)
}

/// Complex gamma function.
///
/// Lanczos on `Re z ≥ 1/2`, reflection `Γ(z)Γ(1−z) = π / sin(πz)` below.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain("gamma argument is not finite"));
    }
    if let Some(n) = pole_at(z) {
        return Err(Error::Pole(n));
    }
    if z.re < 0.5 {
        Ok(PI / (sin_pi(z) * lanczos(1.0 - z)))
    } else {
        Ok(lanczos(z))
    }
}

/// Real gamma function.
pub fn gamma_real(x: f64) -> Result<f64> {
    gamma(Complex64::new(x, 0.0)).map(|g| g.re)
}

/// Reciprocal gamma `1/Γ(x)`; exactly `0` at the poles `x = 0, −1, −2, …`.
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x >= 0.5 {
        1.0 / lanczos(Complex64::new(x, 0.0)).re
    } else {
        sin_pi_real(x) * lanczos(Complex64::new(1.0 - x, 0.0)).re / PI
    }
}
