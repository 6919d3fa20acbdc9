//! Numerical Laplace transforms and Bromwich-line differintegration.
//!
//! The differintegral of a signal with one-sided image `G(s)` is
//!
//! ```text
//! d^λ f(x) = 1/(2πj) ∫_{a−j∞}^{a+j∞} s^λ G(s) e^{sx} ds
//!          = e^{ax}/(2π) ∫ (a+jσ)^λ G(a+jσ) e^{jσx} dσ
//! ```
//!
//! and [`bromwich_differint`] evaluates the second form on a truncated line
//! with an asymptotic correction for the two discarded tails.

mod bromwich;
mod laplace;

pub use bromwich::{
    bromwich_differint, bromwich_differint_split, fourier_form_differint, BromwichConfig, BromwichEstimate,
    QuadratureRule,
};
pub use laplace::{laplace_numeric, LaplaceEstimate, SampledSignal};

use num_complex::Complex64;

/// A one-sided Laplace image `G(s)`, valid for `Re s > abscissa()`.
///
/// Implementations are evaluated from many quadrature nodes at once and must
/// be callable concurrently.
pub trait LaplaceImage: Sync {
    fn eval(&self, s: Complex64) -> Complex64;

    /// Right-most singularity; the Bromwich line must lie to its right.
    fn abscissa(&self) -> f64;

    /// Exponent `p` of the far-field decay `|G(s)| ~ |s|^{−p}`.
    fn decay(&self) -> f64;
}

impl<T: LaplaceImage + ?Sized> LaplaceImage for &T {
    fn eval(&self, s: Complex64) -> Complex64 {
        (**self).eval(s)
    }

    fn abscissa(&self) -> f64 {
        (**self).abscissa()
    }

    fn decay(&self) -> f64 {
        (**self).decay()
    }
}

/// Image given by a closure.
#[derive(Clone, Copy)]
pub struct FnImage<F> {
    f: F,
    abscissa: f64,
    decay: f64,
}

impl<F: Fn(Complex64) -> Complex64 + Sync> FnImage<F> {
    pub fn new(f: F, abscissa: f64, decay: f64) -> Self {
        Self { f, abscissa, decay }
    }
}

impl<F: Fn(Complex64) -> Complex64 + Sync> LaplaceImage for FnImage<F> {
    fn eval(&self, s: Complex64) -> Complex64 {
        (self.f)(s)
    }

    fn abscissa(&self) -> f64 {
        self.abscissa
    }

    fn decay(&self) -> f64 {
        self.decay
    }
}
