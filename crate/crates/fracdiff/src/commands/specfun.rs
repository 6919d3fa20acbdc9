use fracdiff_core::specfun::{gamma, kummer_phi, power_plus, rgamma, upper_incomplete_gamma};
use fracdiff_core::Complex64;
use rayon::prelude::*;

use super::{finish, OK};
use crate::cli::{Function, SpecfunArgs};
use crate::error::CliError;
use crate::table::{Cell, Table};

fn evaluate(args: &SpecfunArgs, z: Complex64, t: f64) -> fracdiff_core::Result<Complex64> {
    match args.function {
        Function::Gamma => gamma(z),
        Function::Rgamma => Ok(Complex64::new(rgamma(t), 0.0)),
        Function::Incgamma => upper_incomplete_gamma(args.a, z),
        Function::Kummer => kummer_phi(args.a, args.b, z),
        Function::PowerPlus => power_plus(t, args.mu).map(Complex64::from),
    }
}

pub fn run(args: &SpecfunArgs) -> Result<(), CliError> {
    let real_only = matches!(args.function, Function::Rgamma | Function::PowerPlus);
    if real_only && args.angle != 0.0 {
        return Err(CliError::Usage(
            "rgamma and power-plus take real arguments; drop --arg".into(),
        ));
    }
    if !args.angle.is_finite() {
        return Err(CliError::Usage("--arg must be finite".into()));
    }
    let ts = args.grid.points();
    let zs: Vec<Complex64> = ts
        .iter()
        .map(|&t| {
            if args.angle == 0.0 {
                Complex64::new(t, 0.0)
            } else {
                Complex64::from_polar(t, args.angle)
            }
        })
        .collect();
    let results: Vec<_> = ts.par_iter().zip(&zs).map(|(&t, &z)| evaluate(args, z, t)).collect();

    let mut table = Table::new(vec!["t", "z_re", "z_im", "re", "im", "status"]);
    let mut failures = 0;
    for ((&t, z), result) in ts.iter().zip(&zs).zip(results) {
        let (re, im, status): (Cell, Cell, String) = match result {
            Ok(v) => (v.re.into(), v.im.into(), OK.into()),
            Err(e) => {
                failures += 1;
                (Cell::Empty, Cell::Empty, e.to_string())
            }
        };
        table.push(vec![t.into(), z.re.into(), z.im.into(), re, im, status.into()]);
    }
    finish(&table, failures, &args.output)
}
