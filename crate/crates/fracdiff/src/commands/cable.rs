use fracdiff_core::cable::CableParams;
use fracdiff_core::Complex64;
use rayon::prelude::*;

use super::{finish, OK};
use crate::cli::CableArgs;
use crate::error::CliError;
use crate::table::{Cell, Table};

struct Row {
    voltage: Complex64,
    current: Complex64,
    pde: f64,
    exact: f64,
    habitual: f64,
}

fn evaluate(p: &CableParams, x: f64, t: f64, h: f64) -> fracdiff_core::Result<Row> {
    let residual = p.current_voltage_residual(x, t)?;
    Ok(Row {
        voltage: p.voltage(x, t),
        current: p.current(x, t)?,
        pde: p.pde_residual(x, t, h)?,
        exact: residual.exact,
        habitual: residual.habitual,
    })
}

pub fn run(args: &CableArgs) -> Result<(), CliError> {
    let params = CableParams::new(args.r, args.c, args.omega, Complex64::new(args.v0_re, args.v0_im))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    if !(args.pde_h > 0.0 && args.pde_h.is_finite()) {
        return Err(CliError::Usage("--pde-h must be positive".into()));
    }
    if !(args.x_grid.start > args.pde_h) {
        return Err(CliError::Usage(format!(
            "--x-grid must start beyond --pde-h = {} so the stencil stays in x > 0",
            args.pde_h
        )));
    }
    if !(args.t_grid.start > 0.0) {
        return Err(CliError::Usage("--t-grid must start after t = 0".into()));
    }

    let points: Vec<(f64, f64)> = args
        .x_grid
        .points()
        .into_iter()
        .flat_map(|x| args.t_grid.points().into_iter().map(move |t| (x, t)))
        .collect();
    let results: Vec<_> = points
        .par_iter()
        .map(|&(x, t)| evaluate(&params, x, t, args.pde_h))
        .collect();

    let mut headers = vec!["x", "t"];
    if args.physical {
        headers.extend(["v", "i"]);
    } else {
        headers.extend(["re_v", "im_v", "re_i", "im_i"]);
    }
    headers.extend(["pde_residual", "exact_residual", "habitual_residual", "status"]);
    let width = headers.len();
    let mut table = Table::new(headers);
    let mut failures = 0;
    for (&(x, t), result) in points.iter().zip(results) {
        let mut row: Vec<Cell> = vec![x.into(), t.into()];
        match result {
            Ok(r) => {
                if args.physical {
                    row.extend([r.voltage.re.into(), r.current.re.into()]);
                } else {
                    row.extend([
                        r.voltage.re.into(),
                        r.voltage.im.into(),
                        r.current.re.into(),
                        r.current.im.into(),
                    ]);
                }
                row.extend([r.pde.into(), r.exact.into(), r.habitual.into(), OK.into()]);
            }
            Err(e) => {
                failures += 1;
                row.resize(width - 1, Cell::Empty);
                row.push(e.to_string().into());
            }
        }
        table.push(row);
    }
    finish(&table, failures, &args.output)
}
