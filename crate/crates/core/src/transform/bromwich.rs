use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
#[allow(unused_imports)] // inherent f64 methods shadow these once std is linked
use num_traits::Float;

use super::LaplaceImage;
use crate::kernels::{FractionalOrder, IntegrationConstants};
use crate::specfun::principal_pow;
use crate::{CompensatedSum, Error, Result};

/// Orders must stay this far below the image decay exponent.
pub const ORDER_MARGIN: f64 = 0.01;

const TANH_SINH_TMAX: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    /// Uniform nodes with an endpoint (Euler–Maclaurin) correction.
    Trapezoid,
    /// Double-exponential node clustering towards `±Σ`.
    TanhSinh,
}

/// Quadrature parameters for the line `Re s = a`, `|Im s| ≤ half_extent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BromwichConfig {
    pub a: f64,
    pub half_extent: f64,
    pub nodes: usize,
    pub rule: QuadratureRule,
}

impl Default for BromwichConfig {
    fn default() -> Self {
        Self {
            a: 1.0,
            half_extent: 400.0,
            nodes: 1 << 15,
            rule: QuadratureRule::Trapezoid,
        }
    }
}

impl BromwichConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::Config("Bromwich abscissa a must be positive"));
        }
        if !(self.half_extent > 0.0 && self.half_extent.is_finite()) {
            return Err(Error::Config("Bromwich half extent must be positive"));
        }
        if self.nodes < 64 {
            return Err(Error::Config("Bromwich quadrature needs at least 64 nodes"));
        }
        Ok(())
    }

    /// Same rule and abscissa with twice the nodes and twice the extent.
    pub fn refined(&self) -> Self {
        Self {
            half_extent: 2.0 * self.half_extent,
            nodes: 2 * self.nodes,
            ..*self
        }
    }
}

/// Quadrature value with an estimate of the error from truncating the line,
/// discretizing it and rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BromwichEstimate {
    pub value: Complex64,
    pub truncation_bound: f64,
}

struct Line<'a, G: ?Sized> {
    image: &'a G,
    lambda: f64,
    a: f64,
    x: f64,
}

impl<G: LaplaceImage + ?Sized> Line<'_, G> {
    /// Non-oscillatory factor `(a+jσ)^λ G(a+jσ)`.
    fn phi(&self, sigma: f64) -> Complex64 {
        let s = Complex64::new(self.a, sigma);
        principal_pow(s, self.lambda) * self.image.eval(s)
    }

    fn wave(&self, sigma: f64) -> Complex64 {
        Complex64::from_polar(1.0, sigma * self.x)
    }

    fn integrand(&self, sigma: f64) -> Complex64 {
        self.phi(sigma) * self.wave(sigma)
    }

    /// `φ, φ', φ'', φ'''` at `sigma` from five-point stencils.
    fn phi_derivatives(&self, sigma: f64, delta: f64) -> [Complex64; 4] {
        let p = |k: f64| self.phi(sigma + k * delta);
        let (m2, m1, z0, p1, p2) = (p(-2.0), p(-1.0), p(0.0), p(1.0), p(2.0));
        [
            z0,
            (m2 - p2 + 8.0 * (p1 - m1)) / (12.0 * delta),
            (-p2 + 16.0 * p1 - 30.0 * z0 + 16.0 * m1 - m2) / (12.0 * delta * delta),
            (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * delta * delta * delta),
        ]
    }
}

fn check_inputs<G: LaplaceImage + ?Sized>(
    image: &G,
    order: FractionalOrder,
    x: f64,
    cfg: &BromwichConfig,
) -> Result<()> {
    cfg.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain("Bromwich evaluation requires x > 0"));
    }
    if cfg.a <= image.abscissa() {
        return Err(Error::Contour {
            a: cfg.a,
            abscissa: image.abscissa(),
        });
    }
    let cap = image.decay() - ORDER_MARGIN;
    if order.value() > cap {
        return Err(Error::OrderTooLarge {
            order: order.value(),
            decay: image.decay(),
            cap,
        });
    }
    Ok(())
}

/// Differintegral of order `order` at `x` of the signal whose one-sided
/// Laplace image is `image`, by quadrature along `Re s = cfg.a`.
///
/// The line is truncated at `|σ| = Σ` and the two discarded tails are
/// replaced by three terms of their integration-by-parts expansion
/// `∓e^{±jΣx} Σ_m (−1)^m φ^{(m)}(±Σ)/(jx)^{m+1}`. The reported bound adds the
/// next tail term, the leading discretization remainder and a rounding
/// allowance.
///
/// Orders above `decay − 0.01` are rejected; see [`bromwich_differint_split`].
pub fn bromwich_differint<G: LaplaceImage + ?Sized>(
    image: &G,
    order: FractionalOrder,
    x: f64,
    cfg: &BromwichConfig,
) -> Result<BromwichEstimate> {
    check_inputs(image, order, x, cfg)?;
    let line = Line {
        image,
        lambda: order.value(),
        a: cfg.a,
        x,
    };
    let sigma_max = cfg.half_extent;
    let n = cfg.nodes;

    let (interior, l1, discretization) = match cfg.rule {
        QuadratureRule::Trapezoid => {
            let h = 2.0 * sigma_max / n as f64;
            if h * x > FRAC_PI_4 {
                return Err(Error::Resolution(
                    "trapezoid spacing exceeds π/4 per oscillation phase; add nodes",
                ));
            }
            let mut acc = CompensatedSum::new();
            let mut l1 = 0.0;
            for k in 0..=n {
                let sigma = -sigma_max + k as f64 * h;
                let w = if k == 0 || k == n { 0.5 * h } else { h };
                let term = line.integrand(sigma) * w;
                l1 += term.norm();
                acc.add(term);
            }
            let delta = sigma_max / 64.0;
            let jx = Complex64::new(0.0, x);
            let g_derivs = |sigma: f64| {
                let [p0, p1, p2, p3] = line.phi_derivatives(sigma, delta);
                let e = line.wave(sigma);
                let first = (p1 + jx * p0) * e;
                let third = (p3 + 3.0 * jx * p2 + 3.0 * jx * jx * p1 + jx * jx * jx * p0) * e;
                (first, third)
            };
            let (d1_hi, d3_hi) = g_derivs(sigma_max);
            let (d1_lo, d3_lo) = g_derivs(-sigma_max);
            let em = (d1_hi - d1_lo) * (h * h / 12.0);
            let remainder = h.powi(4) / 720.0 * (d3_hi.norm() + d3_lo.norm());
            (acc.value() - em, l1, remainder)
        }
        QuadratureRule::TanhSinh => {
            let ht = 2.0 * TANH_SINH_TMAX / n as f64;
            if sigma_max * FRAC_PI_2 * ht * x > FRAC_PI_4 {
                return Err(Error::Resolution(
                    "tanh-sinh centre spacing exceeds π/4 per oscillation phase; add nodes",
                ));
            }
            let mut fine = CompensatedSum::new();
            let mut coarse = CompensatedSum::new();
            let mut l1 = 0.0;
            for k in 0..=n {
                let t = -TANH_SINH_TMAX + k as f64 * ht;
                let u = FRAC_PI_2 * t.sinh();
                let sigma = sigma_max * u.tanh();
                let w = sigma_max * FRAC_PI_2 * t.cosh() / (u.cosh() * u.cosh());
                let term = line.integrand(sigma) * (w * ht);
                l1 += term.norm();
                fine.add(term);
                if k % 2 == 0 {
                    coarse.add(term * 2.0);
                }
            }
            let fine = fine.value();
            (fine, l1, (fine - coarse.value()).norm())
        }
    };

    let delta = sigma_max / 64.0;
    let jx = Complex64::new(0.0, x);
    let [hi0, hi1, hi2, hi3] = line.phi_derivatives(sigma_max, delta);
    let [lo0, lo1, lo2, lo3] = line.phi_derivatives(-sigma_max, delta);
    let series = |p0: Complex64, p1: Complex64, p2: Complex64| p0 / jx - p1 / (jx * jx) + p2 / (jx * jx * jx);
    let right = -line.wave(sigma_max) * series(hi0, hi1, hi2);
    let left = line.wave(-sigma_max) * series(lo0, lo1, lo2);
    let tail_next = (hi3.norm() + lo3.norm()) / x.powi(4);

    let prefactor = (cfg.a * x).exp() / (2.0 * PI);
    let total = interior + right + left;
    let value = total * prefactor;
    let rounding = 16.0 * f64::EPSILON * (l1 + total.norm());
    Ok(BromwichEstimate {
        value,
        truncation_bound: prefactor * (tail_next + discretization + rounding),
    })
}

/// [`bromwich_differint`] plus the polynomial `Σ a_k x^k` of integration
/// constants, which are admitted only for `λ = −n`.
pub fn fourier_form_differint<G: LaplaceImage + ?Sized>(
    image: &G,
    order: FractionalOrder,
    x: f64,
    consts: &IntegrationConstants,
    cfg: &BromwichConfig,
) -> Result<BromwichEstimate> {
    consts.check(order)?;
    let mut est = bromwich_differint(image, order, x, cfg)?;
    est.value += consts.eval(x);
    Ok(est)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Orders above the image's cap: `d^λ = dⁿ d^{λ−n}` with the integer part
/// taken by a centred `n`-th difference (step `0.01·x/n`, one Richardson
/// extrapolation) of line evaluations at order `λ − n`.
///
/// The difference amplifies the quadrature bound by roughly `h^{−n}`, so this
/// is meant for orders a unit or two above the cap.
pub fn bromwich_differint_split<G: LaplaceImage + ?Sized>(
    image: &G,
    order: FractionalOrder,
    x: f64,
    cfg: &BromwichConfig,
) -> Result<BromwichEstimate> {
    let cap = image.decay() - ORDER_MARGIN;
    if order.value() <= cap {
        return bromwich_differint(image, order, x, cfg);
    }
    let n = (order.value() - cap).ceil() as usize;
    let base = FractionalOrder::new(order.value() - n as f64)?;
    let h = 0.01 * x / n as f64;

    let stencil = |step: f64| -> Result<(Complex64, f64)> {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut bound = 0.0;
        for k in 0..=n {
            let c = binomial(n, k) * if k % 2 == 0 { 1.0 } else { -1.0 };
            let at = x + (n as f64 / 2.0 - k as f64) * step;
            let est = bromwich_differint(image, base, at, cfg)?;
            acc += est.value * c;
            bound += c.abs() * est.truncation_bound;
        }
        let scale = step.powi(n as i32);
        Ok((acc / scale, bound / scale))
    };
    let (fine, fine_bound) = stencil(h)?;
    let (coarse, coarse_bound) = stencil(2.0 * h)?;
    Ok(BromwichEstimate {
        value: (4.0 * fine - coarse) / 3.0,
        truncation_bound: (fine - coarse).norm() / 3.0 + (4.0 * fine_bound + coarse_bound) / 3.0,
    })
}
