//! Tolerances for the verification suites.
//!
//! The shipped defaults live in `tolerances.toml` next to the crate manifest;
//! an override file may set any subset of keys.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_TOML: &str = include_str!("../tolerances.toml");

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    pub step_closed_rel: f64,
    pub step_gl_rel: f64,
    pub step_gl_h: f64,
    pub bromwich_abs: f64,
    pub bromwich_refinement_floor: f64,
    pub kummer_rel: f64,
    pub integer_exact: f64,
    pub integer_fd: f64,
    pub integer_fd_h: f64,
    pub antiderivative_abs: f64,
    pub semigroup_closed_rel: f64,
    pub semigroup_gl_rel: f64,
    pub semigroup_gl_h: f64,
    pub cable_identity: f64,
    pub cable_pde_rel: f64,
    pub cable_pde_h: f64,
    pub cable_pde_ratio_band: f64,
    pub cable_ohm_rel: f64,
    pub cable_attenuation: f64,
    pub habitual_rel: f64,
    pub concordance_rel: f64,
    pub gl_refinement_floor: f64,
    pub reflection: f64,
    pub recurrence_rel: f64,
    pub power_plus_rel: f64,
    pub delta_step_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        toml::from_str(DEFAULT_TOML).expect("shipped tolerances.toml is complete")
    }
}

impl Tolerances {
    /// Defaults with the keys present in `text` replaced.
    pub fn from_overrides(text: &str) -> Result<Self, CliError> {
        let bad = |e: toml::de::Error| CliError::Usage(format!("tolerance file: {e}"));
        let mut merged: toml::Table = toml::from_str(DEFAULT_TOML).map_err(bad)?;
        let overrides: toml::Table = toml::from_str(text).map_err(bad)?;
        for (key, value) in overrides {
            if !merged.contains_key(&key) {
                return Err(CliError::Usage(format!("tolerance file: unknown key `{key}`")));
            }
            let value = match value {
                toml::Value::Integer(i) => toml::Value::Float(i as f64),
                v => v,
            };
            merged.insert(key, value);
        }
        let tol: Tolerances = merged.try_into().map_err(bad)?;
        tol.validate()?;
        Ok(tol)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read tolerance file {}: {e}", path.display())))?;
        Self::from_overrides(&text)
    }

    /// One `key = value` line per tolerance, in declaration order; reads back as an override file.
    pub fn to_toml(&self) -> String {
        let serde_json::Value::Object(fields) = serde_json::to_value(self).expect("plain struct of floats") else {
            unreachable!("struct serializes to an object")
        };
        fields
            .iter()
            .map(|(key, v)| format!("{key} = {:e}\n", v.as_f64().unwrap_or(f64::NAN)))
            .collect()
    }

    fn validate(&self) -> Result<(), CliError> {
        let all = [
            self.step_closed_rel,
            self.step_gl_rel,
            self.step_gl_h,
            self.bromwich_abs,
            self.bromwich_refinement_floor,
            self.kummer_rel,
            self.integer_exact,
            self.integer_fd,
            self.integer_fd_h,
            self.antiderivative_abs,
            self.semigroup_closed_rel,
            self.semigroup_gl_rel,
            self.semigroup_gl_h,
            self.cable_identity,
            self.cable_pde_rel,
            self.cable_pde_h,
            self.cable_pde_ratio_band,
            self.cable_ohm_rel,
            self.cable_attenuation,
            self.habitual_rel,
            self.concordance_rel,
            self.gl_refinement_floor,
            self.reflection,
            self.recurrence_rel,
            self.power_plus_rel,
            self.delta_step_rel,
        ];
        if all.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(CliError::Usage("tolerances must be finite and non-negative".into()));
        }
        for (name, h) in [
            ("step_gl_h", self.step_gl_h),
            ("integer_fd_h", self.integer_fd_h),
            ("semigroup_gl_h", self.semigroup_gl_h),
            ("cable_pde_h", self.cable_pde_h),
        ] {
            if !(h > 0.0 && h < 0.1) {
                return Err(CliError::Usage(format!("{name} must lie in (0, 0.1)")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_file_parses_and_validates() {
        Tolerances::default().validate().unwrap();
        assert_eq!(Tolerances::from_overrides("").unwrap(), Tolerances::default());
    }

    #[test]
    fn partial_override() {
        let t = Tolerances::from_overrides("kummer_rel = 1e-6\nintegrity = 1\n");
        assert!(t.is_err());
        let t = Tolerances::from_overrides("kummer_rel = 1e-6\nsemigroup_gl_rel = 1").unwrap();
        assert_eq!(t.kummer_rel, 1e-6);
        assert_eq!(t.semigroup_gl_rel, 1.0);
        assert_eq!(t.bromwich_abs, Tolerances::default().bromwich_abs);
    }

    #[test]
    fn rendered_toml_reads_back() {
        let t = Tolerances::from_overrides("kummer_rel = 1e-30\ncable_pde_ratio_band = 4").unwrap();
        let text = t.to_toml();
        assert!(text.starts_with("step_closed_rel = 1e-14\n"));
        assert_eq!(Tolerances::from_overrides(&text).unwrap(), t);
    }

    #[test]
    fn rejects_nonsense() {
        assert!(Tolerances::from_overrides("kummer_rel = -1.0").is_err());
        assert!(Tolerances::from_overrides("step_gl_h = 0.0").is_err());
        assert!(Tolerances::from_overrides("kummer_rel = \"tight\"").is_err());
        assert!(Tolerances::from_overrides("not toml at all [").is_err());
    }
}
