use fracdiff_core::kernels::{ClosedFormKernel, FractionalOrder, IntegrationConstants};
use fracdiff_core::oracles::{grunwald_letnikov, OracleConfig};
use fracdiff_core::transform::{bromwich_differint_split, BromwichConfig, QuadratureRule};
use fracdiff_core::{Complex64, Error};
use rayon::prelude::*;

use super::{finish, OK};
use crate::cli::{DifferintArgs, KernelArg, Method, RuleArg};
use crate::error::CliError;
use crate::table::{Cell, Table};

fn kernel(args: &DifferintArgs) -> ClosedFormKernel {
    match args.kernel {
        KernelArg::Step => ClosedFormKernel::HeavisideStep,
        KernelArg::Delta => ClosedFormKernel::DiracDelta,
        KernelArg::Exp => ClosedFormKernel::ComplexExponential { b: args.b },
        KernelArg::Power => ClosedFormKernel::PowerLaw {
            mu: args.mu,
            normalized: !args.unnormalized,
        },
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Closed => "closed",
        Method::Bromwich => "bromwich",
        Method::Gl => "gl",
    }
}

fn validate(args: &DifferintArgs) -> Result<(), CliError> {
    if args.kernel == KernelArg::Exp && !(args.b != 0.0 && args.b.is_finite()) {
        return Err(CliError::Usage(
            "--b must be finite and non-zero; use --kernel step for b = 0".into(),
        ));
    }
    if args.kernel == KernelArg::Power && !(args.mu > -1.0 && args.mu.is_finite()) {
        return Err(CliError::Usage("--mu must exceed -1 for the power-law kernel".into()));
    }
    if args.method == Method::Gl && args.kernel == KernelArg::Delta {
        return Err(CliError::Usage(
            "the delta kernel has no samples; use --method closed or bromwich".into(),
        ));
    }
    if args.method == Method::Gl && !(args.gl_h > 0.0 && args.gl_h.is_finite()) {
        return Err(CliError::Usage("--gl-h must be positive".into()));
    }
    Ok(())
}

pub fn run(args: &DifferintArgs) -> Result<(), CliError> {
    validate(args)?;
    let order = FractionalOrder::new(args.order).map_err(|e| CliError::Usage(e.to_string()))?;
    let consts = IntegrationConstants::from_real(&args.constants);
    consts.check(order).map_err(|e| CliError::Usage(e.to_string()))?;
    let k = kernel(args);

    let bromwich_cfg = BromwichConfig {
        a: args.bromwich.a,
        half_extent: args.bromwich.half_extent,
        nodes: args.bromwich.nodes,
        rule: match args.bromwich.rule {
            RuleArg::Trapezoid => QuadratureRule::Trapezoid,
            RuleArg::TanhSinh => QuadratureRule::TanhSinh,
        },
    };
    if args.method == Method::Bromwich {
        bromwich_cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let gl_cfg = if args.method == Method::Gl {
        Some(OracleConfig::with_step(args.gl_h, args.grid.stop).map_err(|e| CliError::Usage(e.to_string()))?)
    } else {
        None
    };
    let image = k.laplace_image();

    let evaluate = |x: f64| -> Result<(Complex64, Option<f64>), Error> {
        let (value, bound) = match args.method {
            Method::Closed => (k.differint(order, x)?, None),
            Method::Bromwich => {
                let est = bromwich_differint_split(&image, order, x, &bromwich_cfg)?;
                (est.value, Some(est.truncation_bound))
            }
            Method::Gl => {
                let cfg = gl_cfg.as_ref().expect("configured above");
                let f = |t: f64| k.sample(t).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
                (grunwald_letnikov(f, order, x, cfg)?, None)
            }
        };
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::Domain("value is not finite at this point"));
        }
        Ok((value + consts.eval(x), bound))
    };

    let xs = args.grid.points();
    let results: Vec<_> = xs.par_iter().map(|&x| evaluate(x)).collect();

    let mut table = if args.physical {
        Table::new(vec!["x", "value", "method", "error_bound", "status"])
    } else {
        Table::new(vec!["x", "re", "im", "method", "error_bound", "status"])
    };
    let method = method_name(args.method);
    let mut failures = 0;
    for (&x, result) in xs.iter().zip(results) {
        let (values, bound, status): (Vec<Cell>, Cell, String) = match result {
            Ok((v, b)) => {
                let vals = if args.physical {
                    vec![v.re.into()]
                } else {
                    vec![v.re.into(), v.im.into()]
                };
                (vals, b.into(), OK.into())
            }
            Err(e) => {
                failures += 1;
                let width = if args.physical { 1 } else { 2 };
                (vec![Cell::Empty; width], Cell::Empty, e.to_string())
            }
        };
        let mut row = vec![x.into()];
        row.extend(values);
        row.extend([method.into(), bound, status.into()]);
        table.push(row);
    }
    finish(&table, failures, &args.output)
}
