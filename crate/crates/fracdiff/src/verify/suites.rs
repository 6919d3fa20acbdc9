use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use fracdiff_core::cable::CableParams;
use fracdiff_core::kernels::{
    differint_delta, differint_exp, differint_power, differint_step, ClosedFormKernel, FractionalOrder,
};
use fracdiff_core::oracles::{
    finite_difference, grunwald_letnikov, grunwald_letnikov_grid, riemann_liouville_integral, OracleConfig,
};
use fracdiff_core::specfun::{
    gamma, gamma_real, kummer_phi, power_plus, principal_ln, principal_pow, sin_pi, upper_incomplete_gamma,
};
use fracdiff_core::transform::{bromwich_differint, BromwichConfig, FnImage, LaplaceImage, QuadratureRule};
use fracdiff_core::{Complex64, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Check, Suite};
use crate::tolerances::Tolerances;

const REFLECTION_SEED: u64 = 0x5eed_f4ac;

pub(super) fn run_suite(suite: Suite, tol: &Tolerances) -> Vec<Check> {
    match suite {
        Suite::Step => step(tol),
        Suite::Bromwich => bromwich(tol),
        Suite::Kummer => kummer(tol),
        Suite::Integer => integer(tol),
        Suite::Semigroup => semigroup(tol),
        Suite::Cable => cable(tol),
        Suite::Habitual => habitual(tol),
        Suite::Concordance => concordance(tol),
        Suite::Specfun => specfun(tol),
        Suite::Kernels => kernels(tol),
    }
}

fn ord(lambda: f64) -> Result<FractionalOrder> {
    FractionalOrder::new(lambda)
}

fn one(_: f64) -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn rel(value: Complex64, reference: Complex64) -> f64 {
    (value - reference).norm() / reference.norm()
}

/// `max` that propagates NaN, so a broken evaluation cannot pass.
fn worse(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

fn worst_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, worse)
}

fn measure(suite: Suite, name: &str, tolerance: f64, f: impl FnOnce() -> Result<f64>) -> Check {
    match f() {
        Ok(w) => Check::at_most(suite, name, w, tolerance),
        Err(e) => Check::failed(suite, name, e),
    }
}

fn step(tol: &Tolerances) -> Vec<Check> {
    const XS: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 5.0];
    let s = Suite::Step;
    vec![
        measure(
            s,
            "order 1/2 closed form equals 1/sqrt(pi x)",
            tol.step_closed_rel,
            || {
                let mut w = 0.0;
                for x in XS {
                    let v = differint_step(ord(0.5)?, x)?;
                    let expected = 1.0 / (PI * x).sqrt();
                    w = worse(w, (v - expected).abs() / expected);
                }
                Ok(w)
            },
        ),
        measure(
            s,
            &format!("Grunwald-Letnikov (h = {:e}) matches closed form", tol.step_gl_h),
            tol.step_gl_rel,
            || {
                let cfg = OracleConfig::with_step(tol.step_gl_h, 5.0)?;
                let errs: Result<Vec<f64>> = XS
                    .par_iter()
                    .map(|&x| {
                        let gl = grunwald_letnikov(one, ord(0.5)?, x, &cfg)?;
                        Ok(rel(gl, differint_step(ord(0.5)?, x)?.into()))
                    })
                    .collect();
                Ok(worst_of(errs?))
            },
        ),
    ]
}

fn bromwich(tol: &Tolerances) -> Vec<Check> {
    const ORDERS: [f64; 6] = [-1.0, -0.5, 0.0, 0.25, 0.5, 0.75];
    const XS: [f64; 3] = [0.5, 1.0, 2.0];
    let s = Suite::Bromwich;
    let image = ClosedFormKernel::HeavisideStep.laplace_image();
    let cases: Vec<(f64, f64)> = ORDERS.iter().flat_map(|&l| XS.iter().map(move |&x| (l, x))).collect();

    // (error, bound) at every case for one configuration
    let sweep = |cfg: BromwichConfig| -> Result<Vec<(f64, f64)>> {
        cases
            .par_iter()
            .map(|&(lambda, x)| {
                let order = ord(lambda)?;
                let est = bromwich_differint(&image, order, x, &cfg)?;
                Ok(((est.value - differint_step(order, x)?).norm(), est.truncation_bound))
            })
            .collect()
    };

    let base_cfg = BromwichConfig::default();
    let tanh_cfg = BromwichConfig {
        rule: QuadratureRule::TanhSinh,
        ..base_cfg
    };
    let (base, (refined, tanh)) = rayon::join(
        || sweep(base_cfg),
        || rayon::join(|| sweep(base_cfg.refined()), || sweep(tanh_cfg)),
    );

    let mut checks = Vec::new();
    match &base {
        Ok(rows) => {
            checks.push(Check::at_most(
                s,
                "trapezoid line quadrature matches closed form",
                worst_of(rows.iter().map(|r| r.0)),
                tol.bromwich_abs,
            ));
            checks.push(Check::at_most(
                s,
                "reported truncation bound covers observed error (error/bound)",
                worst_of(rows.iter().map(|r| r.0 / r.1)),
                1.0,
            ));
        }
        Err(e) => checks.push(Check::failed(s, "trapezoid line quadrature matches closed form", e)),
    }
    let name = "doubling nodes and extent does not increase error";
    match (&base, &refined) {
        (Ok(b), Ok(r)) => checks.push(Check::at_most(
            s,
            name,
            worst_of(b.iter().zip(r).map(|(b, r)| r.0 - b.0)),
            tol.bromwich_refinement_floor,
        )),
        (Err(e), _) | (_, Err(e)) => checks.push(Check::failed(s, name, e)),
    }
    let name = "tanh-sinh line quadrature matches closed form";
    match &tanh {
        Ok(rows) => checks.push(Check::at_most(
            s,
            name,
            worst_of(rows.iter().map(|r| r.0)),
            tol.bromwich_abs,
        )),
        Err(e) => checks.push(Check::failed(s, name, e)),
    }

    checks.push(measure(s, "linear in the image (residual/combined bound)", 1.0, || {
        let g1 = ClosedFormKernel::HeavisideStep.laplace_image();
        let g2 = ClosedFormKernel::ComplexExponential { b: 1.5 }.laplace_image();
        let (alpha, beta) = (Complex64::new(2.0, -1.0), Complex64::new(-0.5, 0.25));
        let combo = FnImage::new(move |z| alpha * g1.eval(z) + beta * g2.eval(z), 0.0, 1.0);
        let mut w = 0.0;
        for (lambda, x) in [(0.25, 1.3), (-0.5, 0.7), (0.5, 2.0)] {
            let order = ord(lambda)?;
            let r1 = bromwich_differint(&g1, order, x, &base_cfg)?;
            let r2 = bromwich_differint(&g2, order, x, &base_cfg)?;
            let rc = bromwich_differint(&combo, order, x, &base_cfg)?;
            let bound = alpha.norm() * r1.truncation_bound + beta.norm() * r2.truncation_bound + rc.truncation_bound;
            w = worse(w, (rc.value - (alpha * r1.value + beta * r2.value)).norm() / bound);
        }
        Ok(w)
    }));

    checks.push(measure(
        s,
        "independent of line abscissa (difference/combined bound)",
        1.0,
        || {
            let mut w = 0.0;
            for (lambda, x) in [(0.25, 1.0), (0.5, 2.0), (-0.5, 0.5)] {
                let order = ord(lambda)?;
                let here = bromwich_differint(&image, order, x, &base_cfg)?;
                for a in [0.5, 2.0] {
                    let there = bromwich_differint(&image, order, x, &BromwichConfig { a, ..base_cfg })?;
                    let bound = here.truncation_bound + there.truncation_bound;
                    w = worse(w, (here.value - there.value).norm() / bound);
                }
            }
            Ok(w)
        },
    ));
    checks
}

fn kummer_residual(lambda: f64, z: Complex64) -> Result<f64> {
    let phi = kummer_phi(1.0, 1.0 - lambda, z)?;
    let bracket = gamma_real(1.0 - lambda)? + lambda * upper_incomplete_gamma(-lambda, z)?;
    let via_gamma = principal_pow(z, lambda) * z.exp() * bracket;
    Ok((phi - via_gamma).norm() / phi.norm())
}

fn kummer(tol: &Tolerances) -> Vec<Check> {
    const LAMBDAS: [f64; 3] = [0.25, 0.5, 0.75];
    let s = Suite::Kummer;
    vec![
        measure(
            s,
            "series equals incomplete-gamma form at z = j{0.1, 1, 5, 10}",
            tol.kummer_rel,
            || {
                let mut w = 0.0;
                for lambda in LAMBDAS {
                    for bx in [0.1, 1.0, 5.0, 10.0] {
                        w = worse(w, kummer_residual(lambda, Complex64::new(0.0, bx))?);
                    }
                }
                Ok(w)
            },
        ),
        measure(
            s,
            "series equals incomplete-gamma form on z = j(0, 10]",
            tol.kummer_rel,
            || {
                let mut w = 0.0;
                for lambda in LAMBDAS {
                    for i in 1..=40 {
                        w = worse(w, kummer_residual(lambda, Complex64::new(0.0, 0.25 * i as f64))?);
                    }
                }
                Ok(w)
            },
        ),
        measure(s, "identity at real z = 2, order 1/2", tol.kummer_rel, || {
            kummer_residual(0.5, Complex64::new(2.0, 0.0))
        }),
    ]
}

fn integer(tol: &Tolerances) -> Vec<Check> {
    let s = Suite::Integer;
    let bs = [0.5, 2.0, -3.0];
    let xs = [0.3, 1.0, 4.0];
    vec![
        measure(s, "exponential at order 1 equals jb e^{jbx}", tol.integer_exact, || {
            let mut w = 0.0;
            for b in bs {
                for x in xs {
                    let v = differint_exp(ord(1.0)?, b, x)?;
                    let expected = Complex64::new(0.0, b) * Complex64::from_polar(1.0, b * x);
                    w = worse(w, (v - expected).norm());
                }
            }
            Ok(w)
        }),
        measure(s, "step at order -1 equals x", tol.integer_exact, || {
            let mut w = 0.0;
            for x in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
                w = worse(w, (differint_step(ord(-1.0)?, x)? - x).abs());
            }
            Ok(w)
        }),
        measure(s, "delta at order -1 equals 1", 0.0, || {
            let mut w = 0.0;
            for x in [1e-3, 0.5, 1.0, 5.0, 1e3] {
                w = worse(w, (differint_delta(ord(-1.0)?, x)? - 1.0).abs());
            }
            Ok(w)
        }),
        measure(
            s,
            &format!(
                "exponential at order 1 matches centred difference (h = {:e})",
                tol.integer_fd_h
            ),
            tol.integer_fd,
            || {
                let mut w = 0.0;
                for b in bs {
                    for x in xs {
                        let v = differint_exp(ord(1.0)?, b, x)?;
                        let fd = finite_difference(|t| Complex64::from_polar(1.0, b * t), x, tol.integer_fd_h)?;
                        w = worse(w, (v - fd).norm());
                    }
                }
                Ok(w)
            },
        ),
        measure(
            s,
            "step at order -1 matches running trapezoid of U",
            tol.antiderivative_abs,
            || {
                const DX: f64 = 1e-3;
                const PER_STATION: usize = 100;
                let mut running = 0.0;
                let mut w = 0.0;
                for station in 1..=100 {
                    for k in 0..PER_STATION {
                        let left = ((station - 1) * PER_STATION + k) as f64 * DX;
                        let u = |t: f64| if t >= 0.0 { 1.0 } else { 0.0 };
                        running += 0.5 * DX * (u(left) + u(left + DX));
                    }
                    let x = station as f64 * PER_STATION as f64 * DX;
                    w = worse(w, (differint_step(ord(-1.0)?, x)? - running).abs());
                }
                Ok(w)
            },
        ),
    ]
}

fn semigroup(tol: &Tolerances) -> Vec<Check> {
    const ORDERS: [f64; 2] = [0.25, 0.5];
    const MUS: [f64; 3] = [0.5, 1.0, 2.0];
    let s = Suite::Semigroup;
    let combos: Vec<(f64, f64, f64)> = ORDERS
        .iter()
        .flat_map(|&a| ORDERS.iter().flat_map(move |&b| MUS.iter().map(move |&m| (a, b, m))))
        .collect();
    vec![
        measure(
            s,
            "closed-form composition on x^mu/Gamma(mu+1)",
            tol.semigroup_closed_rel,
            || {
                let mut w = 0.0;
                for &(alpha, beta, mu) in &combos {
                    for i in 0..=10 {
                        let x = 0.5 + 0.25 * i as f64;
                        let composed = differint_power(ord(beta)?, mu - alpha, x)?;
                        let direct = differint_power(ord(alpha + beta)?, mu, x)?;
                        w = worse(w, (composed - direct).abs() / direct.abs());
                    }
                }
                Ok(w)
            },
        ),
        measure(
            s,
            &format!(
                "Grunwald-Letnikov applied twice (h = {:e}) matches order alpha+beta",
                tol.semigroup_gl_h
            ),
            tol.semigroup_gl_rel,
            || {
                let h = tol.semigroup_gl_h;
                let n = (3.0 / h).round() as usize;
                let errs: Result<Vec<f64>> = combos
                    .par_iter()
                    .map(|&(alpha, beta, mu)| {
                        let scale = 1.0 / gamma_real(mu + 1.0)?;
                        let samples: Vec<Complex64> = (0..=n)
                            .map(|m| Ok(Complex64::new(power_plus(m as f64 * h, mu)? * scale, 0.0)))
                            .collect::<Result<_>>()?;
                        let once = grunwald_letnikov_grid(&samples, ord(alpha)?, h)?;
                        let twice = grunwald_letnikov_grid(&once, ord(beta)?, h)?;
                        let mut w = 0.0;
                        for (m, v) in twice.iter().enumerate() {
                            let x = m as f64 * h;
                            if !(0.5 - 1e-12..=3.0 + 1e-12).contains(&x) {
                                continue;
                            }
                            let exact = differint_power(ord(alpha + beta)?, mu, x)?;
                            w = worse(w, rel(*v, exact.into()));
                        }
                        Ok(w)
                    })
                    .collect();
                Ok(worst_of(errs?))
            },
        ),
    ]
}

const LEVELS: [f64; 3] = [0.5, 1.0, 2.0];

fn unit_cable() -> Result<CableParams> {
    CableParams::new(1.0, 1.0, 1.0, Complex64::new(1.0, 0.0))
}

fn cable(tol: &Tolerances) -> Vec<Check> {
    let s = Suite::Cable;
    let h = tol.cable_pde_h;
    vec![
        measure(s, "voltage at x = 0 equals the drive", 0.0, || {
            let mut w = 0.0;
            for &omega in &[0.5, 1.0, 5.0] {
                let p = CableParams::new(2.0, 0.5, omega, Complex64::new(0.3, -1.2))?;
                for i in 0..50 {
                    let t = 0.37 * i as f64;
                    let drive = p.v0() * Complex64::from_polar(1.0, omega * t);
                    w = worse(w, (p.voltage(0.0, t) - drive).norm());
                }
            }
            Ok(w)
        }),
        measure(
            s,
            "current equals corrected half-derivative across R, C, omega, x, t",
            tol.cable_identity,
            || {
                let mut w = 0.0;
                for r in LEVELS {
                    for c in LEVELS {
                        for omega in [0.5, 1.0, 5.0] {
                            let p = CableParams::new(r, c, omega, Complex64::new(1.0, 0.0))?;
                            for x in [0.1, 1.0] {
                                for t in [0.5, 1.0, 10.0] {
                                    w = worse(w, p.current_voltage_residual(x, t)?.exact);
                                }
                            }
                        }
                    }
                }
                Ok(w)
            },
        ),
        measure(
            s,
            &format!("cable equation residual / |V| at h = {h:e}"),
            tol.cable_pde_rel,
            || {
                let p = unit_cable()?;
                Ok(p.pde_residual(1.0, 1.0, h)? / p.voltage(1.0, 1.0).norm())
            },
        ),
        measure(
            s,
            "cable equation residual ratio at h vs h/2, distance from 4",
            tol.cable_pde_ratio_band,
            || {
                let mut w = 0.0;
                for (r, c, omega) in [(1.0, 1.0, 1.0), (2.0, 0.5, 5.0), (0.5, 2.0, 0.5)] {
                    let p = CableParams::new(r, c, omega, Complex64::new(1.0, 0.0))?;
                    let ratio = p.pde_residual(1.0, 1.0, h)? / p.pde_residual(1.0, 1.0, h / 2.0)?;
                    w = worse(w, (ratio - 4.0).abs());
                }
                Ok(w)
            },
        ),
        measure(
            s,
            "current equals -(1/R) dV/dx on a 10x10 grid",
            tol.cable_ohm_rel,
            || {
                let p = CableParams::new(2.0, 0.5, 3.0, Complex64::new(0.8, 0.6))?;
                let mut w = 0.0;
                for i in 0..10 {
                    let x = 0.1 + 0.3 * i as f64;
                    for j in 0..10 {
                        let t = 0.2 + 0.7 * j as f64;
                        let grad = finite_difference(|y| p.voltage(y, t), x, 1e-5)?;
                        let current = p.current(x, t)?;
                        w = worse(w, (current + grad / p.r()).norm() / current.norm());
                    }
                }
                Ok(w)
            },
        ),
        measure(
            s,
            "log-amplitude and phase slope both equal -k",
            tol.cable_attenuation,
            || {
                let mut w = 0.0;
                let d = 0.1;
                for omega in [0.5, 1.0, 5.0] {
                    let p = CableParams::new(2.0, 0.5, omega, Complex64::new(0.5, 0.5))?;
                    let k = p.attenuation();
                    for i in 1..20 {
                        let x = 0.25 * i as f64;
                        let ratio = p.voltage(x, 0.9) / p.v0();
                        w = worse(w, (ratio.norm().ln() + k * x).abs());
                        let slope = (p.voltage(x + d, 0.9) / p.voltage(x, 0.9)).arg() / d;
                        w = worse(w, (slope + k).abs());
                    }
                }
                Ok(w)
            },
        ),
    ]
}

fn habitual(tol: &Tolerances) -> Vec<Check> {
    let s = Suite::Habitual;
    let x = 1.0;
    let at = |omega: f64, omega_t: f64| -> Result<f64> {
        let p = CableParams::new(1.0, 1.0, omega, Complex64::new(1.0, 0.0))?;
        let t = omega_t / omega;
        Ok(p.current_voltage_residual(x, t)?.habitual / p.current(x, t)?.norm())
    };
    let omegas = [0.5, 1.0, 5.0];
    let late = || -> Result<Vec<f64>> { omegas.iter().map(|&w| at(w, 100.0)).collect() };
    let early = || -> Result<Vec<f64>> { omegas.iter().map(|&w| at(w, 1.0)).collect() };
    let name = "late residual below early residual (ratio)";
    let decay = match (late(), early()) {
        (Ok(l), Ok(e)) => Check::below(s, name, worst_of(l.iter().zip(&e).map(|(l, e)| l / e)), 1.0),
        (Err(err), _) | (_, Err(err)) => Check::failed(s, name, err),
    };
    vec![
        measure(
            s,
            "uncorrected residual / |i| at omega t = 100",
            tol.habitual_rel,
            || Ok(worst_of(late()?)),
        ),
        decay,
    ]
}

fn concordance(tol: &Tolerances) -> Vec<Check> {
    let s = Suite::Concordance;
    type Signal = fn(f64) -> Complex64;
    let signals: [(&str, Signal); 3] = [
        ("U", one),
        ("t", |t| Complex64::new(t, 0.0)),
        ("e^{jt}", |t| Complex64::from_polar(1.0, t)),
    ];
    vec![
        measure(
            s,
            "Grunwald-Letnikov at -alpha matches Riemann-Liouville",
            tol.concordance_rel,
            || {
                let cfg = OracleConfig::default();
                let cases: Vec<(Signal, f64, f64)> = signals
                    .iter()
                    .flat_map(|&(_, f)| {
                        [0.5, 1.0]
                            .into_iter()
                            .flat_map(move |a| [0.5, 1.0, 3.0].map(|x| (f, a, x)))
                    })
                    .collect();
                let errs: Result<Vec<f64>> = cases
                    .par_iter()
                    .map(|&(f, alpha, x)| {
                        let gl = grunwald_letnikov(f, ord(-alpha)?, x, &cfg)?;
                        let rl = riemann_liouville_integral(f, alpha, x, &cfg)?;
                        Ok(rel(gl, rl))
                    })
                    .collect();
                Ok(worst_of(errs?))
            },
        ),
        measure(
            s,
            "halving h does not increase Grunwald-Letnikov error",
            tol.gl_refinement_floor,
            || {
                let cases: [(Signal, f64, Complex64); 4] = [
                    (one, 0.5, differint_step(ord(0.5)?, 1.0)?.into()),
                    (one, -0.5, differint_step(ord(-0.5)?, 1.0)?.into()),
                    (signals[2].1, 0.5, differint_exp(ord(0.5)?, 1.0, 1.0)?),
                    (signals[1].1, 0.25, differint_power(ord(0.25)?, 1.0, 1.0)?.into()),
                ];
                let mut w = 0.0;
                for (f, lambda, exact) in cases {
                    let mut previous: Option<f64> = None;
                    for h in [1e-3, 5e-4, 2.5e-4, 1.25e-4] {
                        let cfg = OracleConfig::with_step(h, 1.0)?;
                        let err = (grunwald_letnikov(f, ord(lambda)?, 1.0, &cfg)? - exact).norm();
                        if let Some(p) = previous {
                            w = worse(w, err - p);
                        }
                        previous = Some(err);
                    }
                }
                Ok(w)
            },
        ),
    ]
}

fn specfun(tol: &Tolerances) -> Vec<Check> {
    let s = Suite::Specfun;
    vec![
        measure(s, "gamma reflection on 200 seeded points", tol.reflection, || {
            let mut rng = ChaCha8Rng::seed_from_u64(REFLECTION_SEED);
            let mut w = 0.0;
            let mut taken = 0;
            while taken < 200 {
                let z = Complex64::from_polar(rng.random_range(0.0..10.0), rng.random_range(-PI..PI));
                if (z - z.re.round()).norm() < 0.1 {
                    continue;
                }
                taken += 1;
                let prod = gamma(z)? * gamma(1.0 - z)? * sin_pi(z) / PI;
                w = worse(w, (prod - 1.0).norm());
            }
            Ok(w)
        }),
        measure(
            s,
            "incomplete-gamma recurrence on a log grid",
            tol.recurrence_rel,
            || {
                let mut w = 0.0;
                for a in [-1.5, -0.5, 0.5, 1.5] {
                    for arg in [0.0, FRAC_PI_4, -FRAC_PI_4, FRAC_PI_2] {
                        for i in 0..=24 {
                            let r = 10f64.powf(-2.0 + i as f64 * (50f64.log10() + 2.0) / 24.0);
                            let z = Complex64::from_polar(r, arg);
                            let lhs = upper_incomplete_gamma(a + 1.0, z)?;
                            let rhs = a * upper_incomplete_gamma(a, z)? + (a * principal_ln(z) - z).exp();
                            w = worse(w, rel(rhs, lhs));
                        }
                    }
                }
                Ok(w)
            },
        ),
        measure(s, "x+ powers multiply", tol.power_plus_rel, || {
            let mut w = 0.0;
            let mus = [-1.5, -0.5, 0.25, 1.0, 2.5];
            for x in [-2.5, -0.3, 0.3, 1.0, 2.5, 7.0] {
                for m1 in mus {
                    for m2 in mus {
                        let lhs = power_plus(x, m1)? * power_plus(x, m2)?;
                        let rhs = power_plus(x, m1 + m2)?;
                        let scale = rhs.abs().max(f64::MIN_POSITIVE);
                        w = worse(w, if lhs == rhs { 0.0 } else { (lhs - rhs).abs() / scale });
                    }
                }
            }
            Ok(w)
        }),
    ]
}

fn kernels(tol: &Tolerances) -> Vec<Check> {
    vec![measure(
        Suite::Kernels,
        "delta at order lambda equals step at order lambda+1",
        tol.delta_step_rel,
        || {
            let mut w = 0.0;
            for lambda in [-2.7, -1.5, -0.25, 0.3, 0.5, 1.7, 2.4] {
                for x in [0.1, 1.0, 3.0, 10.0] {
                    let d = differint_delta(ord(lambda)?, x)?;
                    let st = differint_step(ord(lambda + 1.0)?, x)?;
                    w = worse(w, (d - st).abs() / st.abs());
                }
            }
            Ok(w)
        },
    )]
}
