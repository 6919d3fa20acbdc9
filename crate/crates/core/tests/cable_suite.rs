use fracdiff_core::cable::CableParams;
use fracdiff_core::oracles::{finite_difference, grunwald_letnikov, OracleConfig};
use fracdiff_core::Complex64;

const LEVELS: [f64; 3] = [0.5, 1.0, 2.0];

#[test]
fn exact_relation_holds_across_parameter_grid() {
    let mut worst: f64 = 0.0;
    for &r in &LEVELS {
        for &c in &LEVELS {
            for &omega in &[0.5, 1.0, 5.0] {
                let p = CableParams::new(r, c, omega, Complex64::new(1.0, 0.0)).unwrap();
                for &x in &[0.1, 1.0] {
                    for &t in &[0.5, 1.0, 10.0] {
                        worst = worst.max(p.current_voltage_residual(x, t).unwrap().exact);
                    }
                }
            }
        }
    }
    assert!(worst <= 1e-9, "worst {worst:e}");
}

#[test]
fn ohm_law_on_grid() {
    let p = CableParams::new(2.0, 0.5, 3.0, Complex64::new(0.8, 0.6)).unwrap();
    for i in 0..10 {
        let x = 0.1 + 0.3 * i as f64;
        for j in 0..10 {
            let t = 0.2 + 0.7 * j as f64;
            let grad = finite_difference(|s| p.voltage(s, t), x, 1e-5).unwrap();
            let current = p.current(x, t).unwrap();
            assert!((current + grad / p.r()).norm() <= 1e-6 * current.norm(), "x={x} t={t}");
        }
    }
}

#[test]
fn half_derivative_against_gl_in_time() {
    let p = CableParams::new(1.0, 1.0, 1.0, Complex64::new(1.0, 0.0)).unwrap();
    let (x, t) = (0.5, 2.0);
    let gl = grunwald_letnikov(
        |s| p.voltage(x, s),
        fracdiff_core::kernels::FractionalOrder::new(0.5).unwrap(),
        t,
        &OracleConfig::default(),
    )
    .unwrap();
    let closed = p.half_derivative_voltage(x, t).unwrap();
    assert!((gl - closed).norm() < 1e-3 * closed.norm());
}

#[test]
fn habitual_residual_decays_in_time() {
    let p = CableParams::new(1.0, 1.0, 1.0, Complex64::new(1.0, 0.0)).unwrap();
    let mut previous = f64::INFINITY;
    for &t in &[1.0, 3.0, 10.0, 30.0, 100.0] {
        let r = p.current_voltage_residual(1.0, t).unwrap().habitual;
        assert!(r < previous);
        previous = r;
    }
    let i = p.current(1.0, 100.0).unwrap().norm();
    assert!(previous <= 1e-2 * i);
}

#[test]
fn pde_residual_is_second_order() {
    for &(r, c, omega) in &[(1.0, 1.0, 1.0), (2.0, 0.5, 5.0)] {
        let p = CableParams::new(r, c, omega, Complex64::new(1.0, 0.0)).unwrap();
        let (x, t) = (1.0, 1.0);
        let coarse = p.pde_residual(x, t, 1e-3).unwrap();
        let fine = p.pde_residual(x, t, 5e-4).unwrap();
        if omega == 1.0 {
            assert!(coarse <= 1e-5 * p.voltage(x, t).norm());
        }
        assert!((coarse / fine - 4.0).abs() < 0.5);
    }
}
