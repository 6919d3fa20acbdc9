//! Closed-form differintegrals of the step, the Dirac delta, the one-sided
//! complex exponential and the normalized power law `x₊^μ/Γ(μ+1)`.
//!
//! All kernels use lower terminal 0 (signals supported on `x ≥ 0`). Results
//! that are distributions (`δ` and its derivatives) are refused at pointwise
//! evaluation with [`Error::Distributional`].

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use crate::specfun::{power_plus, principal_pow, rgamma, upper_incomplete_gamma};
use crate::transform::LaplaceImage;
use crate::{Distribution, Error, Result};

/// A finite real order; positive differentiates, negative integrates.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    /// Orders closer than this to an integer are treated as that integer.
    pub const INTEGER_TOL: f64 = 1e-9;

    pub fn new(lambda: f64) -> Result<Self> {
        if lambda.is_finite() {
            Ok(Self(lambda))
        } else {
            Err(Error::Domain("order must be finite"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The integer this order is flagged as, if any.
    pub fn as_integer(self) -> Option<i64> {
        let n = self.0.round();
        ((self.0 - n).abs() <= Self::INTEGER_TOL).then_some(n as i64)
    }

    pub fn is_integer(self) -> bool {
        self.as_integer().is_some()
    }

    /// The order with integer snapping applied.
    pub fn snapped(self) -> f64 {
        self.as_integer().map_or(self.0, |n| n as f64)
    }
}

impl TryFrom<f64> for FractionalOrder {
    type Error = Error;

    fn try_from(lambda: f64) -> Result<Self> {
        Self::new(lambda)
    }
}

/// Coefficients `a₀, a₁, …` of the arbitrary polynomial an `n`-fold
/// integration may add. Empty unless supplied.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct IntegrationConstants(Vec<Complex64>);

impl IntegrationConstants {
    pub fn new(coefficients: Vec<Complex64>) -> Self {
        Self(coefficients)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_real(coefficients: &[f64]) -> Self {
        Self(coefficients.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Constants that turn the lower-terminal-0 integral of `U(x)e^{jbx}` of
    /// order `−n` into `(jb)^{−n} e^{jbx}`, i.e. the first `n` Taylor terms
    /// `(jb)^{k−n} x^k / k!` of that function.
    pub fn exponential_tail(b: f64, n: u32) -> Self {
        let jb = Complex64::new(0.0, b);
        let mut coef = Vec::with_capacity(n as usize);
        let mut c = jb.powi(-(n as i32));
        for k in 0..n {
            coef.push(c);
            c *= jb / (k + 1) as f64;
        }
        Self(coef)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `Σ a_k x^k`.
    pub fn eval(&self, x: f64) -> Complex64 {
        self.0
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    /// Constants are admitted only for `λ = −n`, at most `n` of them.
    pub fn check(&self, order: FractionalOrder) -> Result<()> {
        if self.is_empty() {
            return Ok(());
        }
        match order.as_integer() {
            Some(n) if n < 0 && self.len() as i64 <= -n => Ok(()),
            _ => Err(Error::ConstantsRejected {
                order: order.value(),
                supplied: self.len(),
            }),
        }
    }
}

/// The signals with known closed-form differintegrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedFormKernel {
    HeavisideStep,
    DiracDelta,
    /// `U(x) e^{jbx}`
    ComplexExponential {
        b: f64,
    },
    /// `x₊^μ/Γ(μ+1)` when normalized, `x₊^μ` otherwise; requires `μ > −1`.
    PowerLaw {
        mu: f64,
        normalized: bool,
    },
}

impl ClosedFormKernel {
    /// Value of the signal itself at `x`.
    pub fn sample(&self, x: f64) -> Result<Complex64> {
        match *self {
            Self::HeavisideStep => Ok(Complex64::new(if x >= 0.0 { 1.0 } else { 0.0 }, 0.0)),
            Self::DiracDelta => Err(Error::Distributional(Distribution::DiracDerivative(0))),
            Self::ComplexExponential { b } => Ok(if x >= 0.0 {
                Complex64::new(0.0, b * x).exp()
            } else {
                Complex64::new(0.0, 0.0)
            }),
            Self::PowerLaw { mu, normalized } => {
                let scale = if normalized { rgamma(mu + 1.0) } else { 1.0 };
                Ok(Complex64::new(power_plus(x, mu)? * scale, 0.0))
            }
        }
    }

    /// Closed-form differintegral of order `order` at `x`.
    pub fn differint(&self, order: FractionalOrder, x: f64) -> Result<Complex64> {
        match *self {
            Self::HeavisideStep => differint_step(order, x).map(Complex64::from),
            Self::DiracDelta => differint_delta(order, x).map(Complex64::from),
            Self::ComplexExponential { b } => differint_exp(order, b, x),
            Self::PowerLaw { mu, normalized } => {
                let v = differint_power(order, mu, x)?;
                let scale = if normalized {
                    1.0
                } else {
                    crate::specfun::gamma_real(mu + 1.0)?
                };
                Ok(Complex64::new(v * scale, 0.0))
            }
        }
    }

    /// One-sided Laplace image of the signal.
    pub fn laplace_image(&self) -> KernelImage {
        KernelImage(*self)
    }
}

/// Laplace image of a [`ClosedFormKernel`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelImage(pub ClosedFormKernel);

impl LaplaceImage for KernelImage {
    fn eval(&self, s: Complex64) -> Complex64 {
        match self.0 {
            ClosedFormKernel::HeavisideStep => s.inv(),
            ClosedFormKernel::DiracDelta => Complex64::new(1.0, 0.0),
            ClosedFormKernel::ComplexExponential { b } => (s - Complex64::new(0.0, b)).inv(),
            ClosedFormKernel::PowerLaw { mu, normalized } => {
                let v = principal_pow(s, -mu - 1.0);
                if normalized {
                    v
                } else {
                    v * crate::specfun::gamma_real(mu + 1.0).unwrap_or(f64::NAN)
                }
            }
        }
    }

    fn abscissa(&self) -> f64 {
        match self.0 {
            ClosedFormKernel::DiracDelta => f64::NEG_INFINITY,
            _ => 0.0,
        }
    }

    fn decay(&self) -> f64 {
        match self.0 {
            ClosedFormKernel::HeavisideStep | ClosedFormKernel::ComplexExponential { .. } => 1.0,
            ClosedFormKernel::DiracDelta => 0.0,
            ClosedFormKernel::PowerLaw { mu, .. } => mu + 1.0,
        }
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `d^λ U(x) = x₊^{−λ}/Γ(1−λ)`.
///
/// For `λ = −n` this is `x₊ⁿ/n!`. Positive integer orders give
/// `δ^{(n−1)}` and are refused.
pub fn differint_step(order: FractionalOrder, x: f64) -> Result<f64> {
    match order.as_integer() {
        Some(n) if n > 0 => Err(Error::Distributional(Distribution::DiracDerivative((n - 1) as u32))),
        Some(n) => {
            let m = (-n) as u32;
            Ok(power_plus(x, m as f64)? / factorial(m))
        }
        None => {
            let lambda = order.value();
            Ok(power_plus(x, -lambda)? * rgamma(1.0 - lambda))
        }
    }
}

/// [`differint_step`] plus the polynomial of integration constants.
pub fn differint_step_with(order: FractionalOrder, x: f64, consts: &IntegrationConstants) -> Result<Complex64> {
    consts.check(order)?;
    Ok(differint_step(order, x)? + consts.eval(x))
}

/// `d^λ δ(x) = x^{−λ−1}/Γ(−λ)` on `x > 0`.
pub fn differint_delta(order: FractionalOrder, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain("delta differintegral is a function only on x > 0"));
    }
    match order.as_integer() {
        Some(n) if n >= 0 => Err(Error::Distributional(Distribution::DiracDerivative(n as u32))),
        Some(n) => {
            let m = (-n) as u32;
            Ok(x.powi(m as i32 - 1) / factorial(m - 1))
        }
        None => {
            let lambda = order.value();
            Ok(x.powf(-lambda - 1.0) * rgamma(-lambda))
        }
    }
}

/// `d^λ [U(x)e^{jbx}] = (jb)^λ e^{jbx} [1 + λ Γ(−λ, jbx)/Γ(1−λ)]` on `x > 0`.
///
/// Non-negative integer orders return `(jb)ⁿ e^{jbx}` exactly. Negative
/// integer orders keep the bracket, which then equals the `n`-fold integral
/// from 0; add [`IntegrationConstants::exponential_tail`] to drop the lower
/// terminal contribution.
pub fn differint_exp(order: FractionalOrder, b: f64, x: f64) -> Result<Complex64> {
    if b == 0.0 {
        return Err(Error::DegenerateFrequency);
    }
    if !b.is_finite() {
        return Err(Error::Domain("frequency must be finite"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain("exponential differintegral requires x > 0"));
    }
    let phase = Complex64::new(0.0, b * x).exp();
    if let Some(n) = order.as_integer().filter(|&n| n >= 0) {
        let j_pow = match n % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        return Ok(j_pow * b.powi(n as i32) * phase);
    }
    let lambda = order.snapped();
    let jb = Complex64::new(0.0, b);
    let correction = upper_incomplete_gamma(-lambda, jb * x)? * (lambda * rgamma(1.0 - lambda));
    Ok(principal_pow(jb, lambda) * phase * (1.0 + correction))
}

/// [`differint_exp`] plus the polynomial of integration constants.
pub fn differint_exp_with(order: FractionalOrder, b: f64, x: f64, consts: &IntegrationConstants) -> Result<Complex64> {
    consts.check(order)?;
    Ok(differint_exp(order, b, x)? + consts.eval(x))
}

/// `d^λ [x₊^μ/Γ(μ+1)] = x^{μ−λ}/Γ(μ−λ+1)` on `x > 0`, `μ > −1`.
///
/// A gamma pole in the denominator yields exactly 0.
pub fn differint_power(order: FractionalOrder, mu: f64, x: f64) -> Result<f64> {
    if !(mu > -1.0) || !mu.is_finite() {
        return Err(Error::Domain("power-law kernel needs μ > −1"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain("power-law differintegral requires x > 0"));
    }
    let expo = mu - order.value();
    let denom = FractionalOrder(expo + 1.0);
    let inv_gamma = match denom.as_integer() {
        Some(n) if n <= 0 => return Ok(0.0),
        Some(n) if n <= 171 => 1.0 / factorial(n as u32 - 1),
        Some(n) => rgamma(n as f64),
        None => rgamma(expo + 1.0),
    };
    Ok(x.powf(expo) * inv_gamma)
}
