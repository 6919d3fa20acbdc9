//! The `verify` runner: named checks grouped into suites, each reporting its
//! worst observed error against a tolerance.

mod suites;

use std::fmt;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use rayon::prelude::*;

use crate::tolerances::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    /// Half-derivative of the unit step: closed form and Grünwald–Letnikov.
    Step,
    /// Bromwich-line quadrature against the step closed form.
    Bromwich,
    /// Kummer function against its incomplete-gamma representation.
    Kummer,
    /// Integer-order reductions of the exponential, step and delta kernels.
    Integer,
    /// Composition of orders on the power-law family.
    Semigroup,
    /// RC cable: boundary, field and current/half-derivative identities.
    Cable,
    /// Late-time decay of the uncorrected current/half-derivative relation.
    Habitual,
    /// Grünwald–Letnikov against Riemann–Liouville, and h-refinement.
    Concordance,
    /// Gamma reflection, incomplete-gamma recurrence, x₊ powers.
    Specfun,
    /// Delta kernel against the shifted step kernel.
    Kernels,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Step => "step",
            Suite::Bromwich => "bromwich",
            Suite::Kummer => "kummer",
            Suite::Integer => "integer",
            Suite::Semigroup => "semigroup",
            Suite::Cable => "cable",
            Suite::Habitual => "habitual",
            Suite::Concordance => "concordance",
            Suite::Specfun => "specfun",
            Suite::Kernels => "kernels",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Comparison {
    AtMost,
    Below,
}

/// One named check with its worst-case measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub worst: f64,
    pub tolerance: f64,
    comparison: Comparison,
    pub note: Option<String>,
}

impl Check {
    /// Passes when `worst ≤ tolerance`.
    pub fn at_most(suite: Suite, name: impl Into<String>, worst: f64, tolerance: f64) -> Self {
        Self {
            suite,
            name: name.into(),
            worst,
            tolerance,
            comparison: Comparison::AtMost,
            note: None,
        }
    }

    /// Passes when `worst < limit`.
    pub fn below(suite: Suite, name: impl Into<String>, worst: f64, limit: f64) -> Self {
        Self {
            comparison: Comparison::Below,
            ..Self::at_most(suite, name, worst, limit)
        }
    }

    /// A check that could not be evaluated.
    pub fn failed(suite: Suite, name: impl Into<String>, reason: impl fmt::Display) -> Self {
        Self {
            note: Some(reason.to_string()),
            ..Self::at_most(suite, name, f64::NAN, 0.0)
        }
    }

    pub fn passed(&self) -> bool {
        if self.note.is_some() || self.worst.is_nan() {
            return false;
        }
        match self.comparison {
            Comparison::AtMost => self.worst <= self.tolerance,
            Comparison::Below => self.worst < self.tolerance,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let op = match self.comparison {
            Comparison::AtMost => "<=",
            Comparison::Below => "<",
        };
        write!(
            f,
            "{verdict} [{}] {}: worst {:.3e} {op} {:.3e}",
            self.suite, self.name, self.worst, self.tolerance
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed in {:.2} s",
            self.checks.len(),
            self.checks.len() - failed,
            failed,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const ALL_SUITES: [Suite; 10] = [
    Suite::Step,
    Suite::Bromwich,
    Suite::Kummer,
    Suite::Integer,
    Suite::Semigroup,
    Suite::Cable,
    Suite::Habitual,
    Suite::Concordance,
    Suite::Specfun,
    Suite::Kernels,
];

/// Runs the selected suites (all when `selected` is empty) concurrently and
/// reports their checks in suite order.
pub fn run(selected: &[Suite], tol: &Tolerances) -> Report {
    let start = Instant::now();
    let mut suites: Vec<Suite> = if selected.is_empty() {
        ALL_SUITES.to_vec()
    } else {
        selected.to_vec()
    };
    suites.sort();
    suites.dedup();
    let checks = suites
        .par_iter()
        .map(|&s| suites::run_suite(s, tol))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report {
        checks,
        elapsed: start.elapsed(),
    }
}
