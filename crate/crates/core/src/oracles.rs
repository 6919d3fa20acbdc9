//! Discrete reference approximations used to cross-check the analytic paths.
//!
//! Both differintegral oracles use lower terminal 0, the convention under
//! which the closed-form kernels hold without integration constants.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use crate::kernels::FractionalOrder;
use crate::specfun::rgamma;
use crate::{CompensatedSum, Error, Result};

/// Grünwald–Letnikov step `h`, the largest admissible number of terms and the
/// largest evaluation point; `h·n_terms ≥ window` is enforced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    h: f64,
    n_terms: usize,
    window: f64,
}

impl OracleConfig {
    pub fn new(h: f64, n_terms: usize, window: f64) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Config("oracle step h must be positive"));
        }
        if n_terms == 0 {
            return Err(Error::Config("oracle needs at least one term"));
        }
        if !(window > 0.0 && window.is_finite()) {
            return Err(Error::Config("oracle window must be positive"));
        }
        if h * (n_terms as f64) < window {
            return Err(Error::Config("h·n_terms must cover the window"));
        }
        Ok(Self { h, n_terms, window })
    }

    /// Window of the given size with `n_terms` chosen to cover it.
    pub fn with_step(h: f64, window: f64) -> Result<Self> {
        Self::new(h, (window / h).ceil() as usize + 1, window)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_terms(&self) -> usize {
        self.n_terms
    }

    pub fn window(&self) -> f64 {
        self.window
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            h: 1e-4,
            n_terms: 100_001,
            window: 10.0,
        }
    }
}

/// `w_k = (−1)^k C(λ, k)` via `w_k = w_{k−1}(1 − (λ+1)/k)`.
///
/// `|w_k|` behaves like `k^{−λ−1}`, so the recurrence neither overflows nor
/// underflows for the term counts used here.
pub fn gl_weights(order: FractionalOrder, count: usize) -> Vec<f64> {
    let lambda = order.snapped();
    let mut w = Vec::with_capacity(count);
    let mut current = 1.0;
    for k in 0..count {
        if k > 0 {
            current *= 1.0 - (lambda + 1.0) / k as f64;
        }
        w.push(current);
    }
    w
}

/// `h^{−λ} Σ_{k=0}^{N} w_k f(x − kh)` with `N = ⌊x/h⌋`.
pub fn grunwald_letnikov<F>(f: F, order: FractionalOrder, x: f64, cfg: &OracleConfig) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if !(x > 0.0) {
        return Err(Error::Domain("Grünwald–Letnikov requires x > 0"));
    }
    if x > cfg.window * (1.0 + 1e-12) {
        return Err(Error::Domain("evaluation point lies beyond the oracle window"));
    }
    let n = (x / cfg.h + 1e-9).floor() as usize;
    if n < 8 {
        return Err(Error::Resolution("Grünwald–Letnikov needs at least 8 steps"));
    }
    let n = n.min(cfg.n_terms);
    let weights = gl_weights(order, n + 1);
    let mut acc = CompensatedSum::new();
    for (k, &w) in weights.iter().enumerate() {
        let t = (x - k as f64 * cfg.h).max(0.0);
        acc.add(f(t) * w);
    }
    Ok(acc.value() * cfg.h.powf(-order.snapped()))
}

/// Grünwald–Letnikov applied at every node of a grid `samples[m] = f(m·h)`.
///
/// Entry `n` of the result is `h^{−λ} Σ_{k≤n} w_k samples[n−k]`; feeding the
/// output back in applies a second order on the same grid.
pub fn grunwald_letnikov_grid(samples: &[Complex64], order: FractionalOrder, h: f64) -> Result<Vec<Complex64>> {
    if !(h > 0.0) {
        return Err(Error::Config("grid step must be positive"));
    }
    let weights = gl_weights(order, samples.len());
    let scale = h.powf(-order.snapped());
    Ok((0..samples.len())
        .map(|n| {
            let acc: CompensatedSum = weights[..=n]
                .iter()
                .zip(samples[..=n].iter().rev())
                .map(|(&w, &v)| v * w)
                .collect();
            acc.value() * scale
        })
        .collect())
}

const RL_TMAX: f64 = 4.0;
const RL_MAX_LEVEL: u32 = 12;
const RL_TOL: f64 = 1e-13;

/// `(1/Γ(α)) ∫₀ˣ (x−t)^{α−1} f(t) dt` by tanh-sinh quadrature.
///
/// Distances to both endpoints are formed directly from the node map, so
/// the weakly singular kernel is evaluated without cancellation near `t = x`.
/// The step is halved until successive levels agree to 1e-13.
pub fn riemann_liouville_integral<F>(f: F, alpha: f64, x: f64, cfg: &OracleConfig) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Domain("Riemann–Liouville order must be positive"));
    }
    if !(x > 0.0) {
        return Err(Error::Domain("Riemann–Liouville requires x > 0"));
    }
    if x > cfg.window * (1.0 + 1e-12) {
        return Err(Error::Domain("evaluation point lies beyond the oracle window"));
    }
    let node = |s: f64| {
        let v = FRAC_PI_2 * s.sinh();
        let e = (2.0 * v).exp();
        let to_upper = x / (1.0 + e);
        let from_lower = x / (1.0 + e.recip());
        let w = x * FRAC_PI_2 * s.cosh() / (2.0 * v.cosh() * v.cosh());
        (from_lower, to_upper, w)
    };
    let term = |s: f64| {
        let (t, dist, w) = node(s);
        if dist <= 0.0 || w == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        f(t) * (w * dist.powf(alpha - 1.0))
    };

    let mut step = 0.5;
    let mut acc: CompensatedSum = core::iter::once(term(0.0)).collect();
    let mut k = 1;
    while k as f64 * step <= RL_TMAX {
        let s = k as f64 * step;
        acc.add(term(s));
        acc.add(term(-s));
        k += 1;
    }
    let mut prev = acc.value() * step;
    for _ in 0..RL_MAX_LEVEL {
        step *= 0.5;
        // new nodes are the odd multiples of the halved step
        let mut k = 1;
        while k as f64 * step <= RL_TMAX {
            let s = k as f64 * step;
            acc.add(term(s));
            acc.add(term(-s));
            k += 2;
        }
        let current = acc.value() * step;
        if (current - prev).norm() <= RL_TOL * current.norm().max(1e-300) {
            return Ok(current * rgamma(alpha));
        }
        prev = current;
    }
    Err(Error::NoConvergence {
        iterations: RL_MAX_LEVEL as usize,
        partial: prev * rgamma(alpha),
        bound: f64::NAN,
    })
}

/// Centred difference `(f(x+h) − f(x−h)) / 2h`.
pub fn finite_difference<F>(f: F, x: f64, h: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain("finite-difference step must be positive"));
    }
    Ok((f(x + h) - f(x - h)) / (2.0 * h))
}
