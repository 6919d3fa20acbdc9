use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use crate::{CompensatedSum, Error, Result};

/// Uniformly sampled complex signal `f(start + k·step)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    start: f64,
    step: f64,
    values: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(start: f64, step: f64, values: Vec<Complex64>) -> Result<Self> {
        if !start.is_finite() {
            return Err(Error::Config("signal start must be finite"));
        }
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::Config("signal step must be positive"));
        }
        if values.len() < 2 {
            return Err(Error::Config("signal needs at least two samples"));
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::Config("signal samples must be finite"));
        }
        Ok(Self { start, step, values })
    }

    /// Samples `f` on `start, start+step, …` (`count` points).
    pub fn from_fn(start: f64, step: f64, count: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = (0..count).map(|k| f(start + k as f64 * step)).collect();
        Self::new(start, step, values)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Abscissa of the last sample.
    pub fn end(&self) -> f64 {
        self.start + (self.values.len() - 1) as f64 * self.step
    }
}

/// Truncated transform plus a bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceEstimate {
    pub value: Complex64,
    /// `max|f| over the last tenth of the samples · e^{−Re s·T} / Re s`.
    pub tail_bound: f64,
    /// Set when `tail_bound` exceeds the requested tolerance.
    pub accuracy_warning: bool,
}

/// Trapezoid approximation of `∫ f(x) e^{−sx} dx` over the sampled range.
pub fn laplace_numeric(f: &SampledSignal, s: Complex64, tol: f64) -> Result<LaplaceEstimate> {
    if !(s.re > 0.0) {
        return Err(Error::Region(s.re));
    }
    if f.start < 0.0 {
        return Err(Error::Domain("one-sided transform needs signal start ≥ 0"));
    }
    let n = f.values.len();
    let mut acc = CompensatedSum::new();
    for (k, &v) in f.values.iter().enumerate() {
        let x = f.start + k as f64 * f.step;
        let w = if k == 0 || k == n - 1 { 0.5 } else { 1.0 };
        acc.add(v * (-s * x).exp() * w);
    }
    let value = acc.value() * f.step;

    let tail_len = (n / 10).max(1);
    let tail_max = f.values[n - tail_len..].iter().map(|v| v.norm()).fold(0.0, f64::max);
    let tail_bound = tail_max * (-s.re * f.end()).exp() / s.re;
    Ok(LaplaceEstimate {
        value,
        tail_bound,
        accuracy_warning: tail_bound > tol,
    })
}
