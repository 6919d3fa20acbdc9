use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands;
use crate::error::CliError;
use crate::grid::Grid;
use crate::table::Format;
use crate::tolerances::Tolerances;
use crate::verify::{self, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "fracdiff",
    version,
    about = "Fractional differintegrals, special functions and the RC cable model"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Differintegral of a closed-form signal over a grid of x.
    Differint(DifferintArgs),
    /// Special functions over a ray z = t·e^{jθ}.
    Specfun(SpecfunArgs),
    /// RC cable fields and residuals over an (x, t) grid.
    Cable(CableArgs),
    /// Run the invariant suites and report PASS/FAIL per check.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelArg {
    Step,
    Delta,
    Exp,
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Bromwich,
    Gl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Trapezoid,
    TanhSinh,
}

#[derive(Debug, Clone, Args)]
pub struct BromwichArgs {
    /// Abscissa a of the line Re s = a.
    #[arg(long = "line-a", default_value_t = 1.0)]
    pub a: f64,
    /// Half extent Σ of the truncated line.
    #[arg(long, default_value_t = 400.0)]
    pub half_extent: f64,
    #[arg(long, default_value_t = 1 << 15)]
    pub nodes: usize,
    #[arg(long, value_enum, default_value = "trapezoid")]
    pub rule: RuleArg,
}

#[derive(Debug, Clone, Args)]
pub struct DifferintArgs {
    #[arg(long, value_enum)]
    pub kernel: KernelArg,
    /// Order λ; negative integrates.
    #[arg(long, allow_negative_numbers = true)]
    pub order: f64,
    /// x grid as start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Grid,
    #[arg(long, value_enum, default_value = "closed")]
    pub method: Method,
    /// Frequency b of the exponential kernel U(x)e^{jbx}.
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub b: f64,
    /// Exponent μ of the power-law kernel.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub mu: f64,
    /// Use x₊^μ instead of x₊^μ/Γ(μ+1).
    #[arg(long)]
    pub unnormalized: bool,
    /// Integration constants a₀,a₁,… (negative integer orders only).
    #[arg(long = "constants", value_delimiter = ',', allow_negative_numbers = true)]
    pub constants: Vec<f64>,
    #[command(flatten)]
    pub bromwich: BromwichArgs,
    /// Grünwald–Letnikov step.
    #[arg(long, default_value_t = 1e-4)]
    pub gl_h: f64,
    /// Report only the real part.
    #[arg(long)]
    pub physical: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Gamma,
    Rgamma,
    Incgamma,
    Kummer,
    PowerPlus,
}

#[derive(Debug, Clone, Args)]
pub struct SpecfunArgs {
    #[arg(long, value_enum)]
    pub function: Function,
    /// Modulus grid t as start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Grid,
    /// Ray angle θ in radians; z = t·e^{jθ}.
    #[arg(long = "arg", allow_negative_numbers = true, default_value_t = 0.0)]
    pub angle: f64,
    /// First parameter of Γ(a, z) and Φ(a, b, z).
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub a: f64,
    /// Second parameter of Φ(a, b, z).
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub b: f64,
    /// Exponent of x₊^μ.
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub mu: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CableArgs {
    /// Resistance per unit length.
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    /// Capacitance per unit length.
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Drive angular frequency.
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub v0_re: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub v0_im: f64,
    /// Position grid; must start beyond the difference step.
    #[arg(long, default_value = "0.1:2:20")]
    pub x_grid: Grid,
    /// Time grid; must start after t = 0.
    #[arg(long, default_value = "0.5:10:20")]
    pub t_grid: Grid,
    /// Step of the cable-equation residual stencil.
    #[arg(long, default_value_t = 1e-3)]
    pub pde_h: f64,
    /// Report only real parts of V and i.
    #[arg(long)]
    pub physical: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run only these suites; repeat or comma-separate. Default: all.
    #[arg(long = "suite", value_enum, value_delimiter = ',')]
    pub suites: Vec<Suite>,
    /// TOML file overriding any of the default tolerances.
    #[arg(long, env = "FRACDIFF_TOL_FILE")]
    pub tol_file: Option<PathBuf>,
    /// Print the effective tolerances and exit.
    #[arg(long)]
    pub show_tolerances: bool,
}

fn emit(text: &str) -> Result<(), CliError> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(CliError::Usage(format!("cannot write output: {e}")))
        }
        _ => Ok(()),
    }
}

fn run_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let tol = match &args.tol_file {
        Some(path) => Tolerances::load(path)?,
        None => Tolerances::default(),
    };
    if args.show_tolerances {
        return emit(&tol.to_toml());
    }
    let report = verify::run(&args.suites, &tol);
    emit(&format!("{report}\n"))?;
    if report.all_passed() {
        Ok(())
    } else {
        let names: Vec<String> = report.failures().map(|c| format!("[{}] {}", c.suite, c.name)).collect();
        Err(CliError::VerifyFailed(names.join("; ")))
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Differint(args) => commands::differint::run(&args),
        Command::Specfun(args) => commands::specfun::run(&args),
        Command::Cable(args) => commands::cable::run(&args),
        Command::Verify(args) => run_verify(&args),
    }
}

/// Parses `args`, runs the command and maps the outcome to the exit status:
/// 0 success, 1 verification failure, 2 usage error, 3 numerical failure.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fracdiff: {e}");
            e.exit_code()
        }
    }
}
