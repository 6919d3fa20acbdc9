//! Semi-infinite RC cable driven by `V₀e^{jωt}` at `x = 0`.
//!
//! The voltage solves `∂²V/∂x² = RC·∂V/∂t` on `x > 0` with the decaying
//! branch selected:
//!
//! ```text
//! V(x,t) = V₀ e^{−kx} e^{j(ωt − kx)},   k = √(ωRC/2)
//! i(x,t) = −(1/R) ∂V/∂x = (1+j) √(ωC/2R) V(x,t)
//! ```
//!
//! The half time-derivative of `V` (lower terminal `t = 0`) carries an
//! incomplete-gamma transient, so `i = √(C/R)·∂^{1/2}V/∂t^{1/2}` holds only
//! after that term is removed, or asymptotically as `ωt → ∞`.
//!
//! Values stay complex; the physical quantities are the real parts.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use crate::kernels::{differint_exp, FractionalOrder};
use crate::specfun::{principal_pow, upper_incomplete_gamma};
use crate::{Error, Result};

/// Per-unit-length resistance and capacitance, drive frequency and amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CableParams {
    r: f64,
    c: f64,
    omega: f64,
    v0: Complex64,
}

/// One evaluated point of a field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub x: f64,
    pub t: f64,
    pub value: Complex64,
}

/// Residuals of the current/half-derivative relations at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentVoltageResidual {
    /// `|i − √(C/R)(∂^{1/2}V − correction·V)|`; vanishes identically.
    pub exact: f64,
    /// `|i − √(C/R) ∂^{1/2}V|`; decays like `(ωt)^{−3/2}`.
    pub habitual: f64,
}

impl CableParams {
    pub fn new(r: f64, c: f64, omega: f64, v0: Complex64) -> Result<Self> {
        let positive = |v: f64| v > 0.0 && v.is_finite();
        if !positive(r) {
            return Err(Error::Config("resistance per unit length must be positive"));
        }
        if !positive(c) {
            return Err(Error::Config("capacitance per unit length must be positive"));
        }
        if !positive(omega) {
            return Err(Error::Config("drive frequency must be positive"));
        }
        if !(v0.re.is_finite() && v0.im.is_finite()) {
            return Err(Error::Config("drive amplitude must be finite"));
        }
        Ok(Self { r, c, omega, v0 })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn v0(&self) -> Complex64 {
        self.v0
    }

    /// Attenuation and phase constant `k = √(ωRC/2)`.
    pub fn attenuation(&self) -> f64 {
        (self.omega * self.r * self.c / 2.0).sqrt()
    }

    /// `e^{−(1+j)kx}`
    fn spatial(&self, x: f64) -> Complex64 {
        let k = self.attenuation();
        Complex64::from_polar((-k * x).exp(), -k * x)
    }

    pub fn voltage(&self, x: f64, t: f64) -> Complex64 {
        if x < 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let k = self.attenuation();
        self.v0 * Complex64::from_polar((-k * x).exp(), self.omega * t - k * x)
    }

    /// `∂V/∂x` at `x = 0⁺`: `−(1+j)k V₀e^{jωt}`.
    pub fn boundary_flux(&self, t: f64) -> Complex64 {
        -Complex64::new(1.0, 1.0) * self.attenuation() * self.v0 * Complex64::from_polar(1.0, self.omega * t)
    }

    pub fn current(&self, x: f64, t: f64) -> Result<Complex64> {
        if !(x > 0.0) {
            return Err(Error::Domain("current is defined on x > 0"));
        }
        let g = (self.omega * self.c / (2.0 * self.r)).sqrt();
        Ok(Complex64::new(1.0, 1.0) * g * self.voltage(x, t))
    }

    /// `(jω)^{1/2} Γ(−1/2, jωt) / (2√π)`, the transient that separates the
    /// half-derivative of `V` from `(jω)^{1/2}V`.
    pub fn correction_factor(&self, t: f64) -> Result<Complex64> {
        if !(t > 0.0) {
            return Err(Error::Domain("correction term requires t > 0"));
        }
        let jw = Complex64::new(0.0, self.omega);
        Ok(principal_pow(jw, 0.5) * upper_incomplete_gamma(-0.5, jw * t)? / (2.0 * PI.sqrt()))
    }

    /// `∂^{1/2}V/∂t^{1/2} = V₀ e^{−(1+j)kx} · d^{1/2}[U(t)e^{jωt}]`.
    pub fn half_derivative_voltage(&self, x: f64, t: f64) -> Result<Complex64> {
        if x < 0.0 {
            return Err(Error::Domain("half derivative is evaluated on x ≥ 0"));
        }
        if !(t > 0.0) {
            return Err(Error::Domain("half derivative requires t > 0"));
        }
        let half = FractionalOrder::new(0.5)?;
        Ok(self.v0 * self.spatial(x) * differint_exp(half, self.omega, t)?)
    }

    pub fn current_voltage_residual(&self, x: f64, t: f64) -> Result<CurrentVoltageResidual> {
        let i = self.current(x, t)?;
        let half = self.half_derivative_voltage(x, t)?;
        let v = self.voltage(x, t);
        let scale = (self.c / self.r).sqrt();
        let corrected = half - self.correction_factor(t)? * v;
        Ok(CurrentVoltageResidual {
            exact: (i - scale * corrected).norm(),
            habitual: (i - scale * half).norm(),
        })
    }

    /// `|∂²V/∂x² − RC ∂V/∂t|` by centred differences with step `h` in both
    /// variables. Requires `x > h > 0`.
    pub fn pde_residual(&self, x: f64, t: f64, h: f64) -> Result<f64> {
        if !(h > 0.0) || !(x > h) {
            return Err(Error::Domain("stencil must stay inside x > 0 (need x > h > 0)"));
        }
        let v = |x: f64, t: f64| self.voltage(x, t);
        let d2x = (v(x + h, t) - 2.0 * v(x, t) + v(x - h, t)) / (h * h);
        let dt = (v(x, t + h) - v(x, t - h)) / (2.0 * h);
        Ok((d2x - self.r * self.c * dt).norm())
    }

    /// Voltage on the tensor grid `xs × ts`, `x` varying slowest.
    pub fn voltage_field(&self, xs: &[f64], ts: &[f64]) -> Vec<FieldSample> {
        xs.iter()
            .flat_map(|&x| {
                ts.iter().map(move |&t| FieldSample {
                    x,
                    t,
                    value: self.voltage(x, t),
                })
            })
            .collect()
    }
}
