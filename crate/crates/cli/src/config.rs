//! Flat `key = value` scenario files and their resolution against presets.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{CliError, CliResult};

/// Keys accepted in a config file, in the order they are echoed.
pub const KEYS: [&str; 9] = [
    "preset",
    "field_tesla",
    "n",
    "l",
    "sigma0_nm",
    "sigma0_prime_over_c",
    "sigma_z_nm",
    "kinetic_energy_kev",
    "solenoid_length_cm",
];

pub const DEFAULT_SIGMA_Z_NM: f64 = 100.0;
pub const DEFAULT_SIGMA0_NM: f64 = 100.0;
pub const DEFAULT_N: u32 = 0;
pub const DEFAULT_L: i32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// 1 T, 20 cm, 200 keV
    Tem,
    /// 1 T, 1 km, 1 GeV
    Linac1km,
    /// solenoid length and kinetic energy must be given
    Custom,
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Tem => "tem",
            Self::Linac1km => "linac-1km",
            Self::Custom => "custom",
        }
    }

    /// (field T, length cm, kinetic energy keV)
    fn defaults(&self) -> Option<(f64, f64, f64)> {
        match self {
            Self::Tem => Some((1.0, 20.0, 200.0)),
            Self::Linac1km => Some((1.0, 1.0e5, 1.0e6)),
            Self::Custom => None,
        }
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tem" => Ok(Self::Tem),
            "linac-1km" => Ok(Self::Linac1km),
            "custom" => Ok(Self::Custom),
            other => Err(format!("unknown preset `{other}` (expected tem, linac-1km or custom)")),
        }
    }
}

/// Partially specified scenario: from a file, from flags, or both.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub preset: Option<Preset>,
    pub field_tesla: Option<f64>,
    pub n: Option<u32>,
    pub l: Option<i32>,
    pub sigma0_nm: Option<f64>,
    pub sigma0_prime_over_c: Option<f64>,
    pub sigma_z_nm: Option<f64>,
    pub kinetic_energy_kev: Option<f64>,
    pub solenoid_length_cm: Option<f64>,
}

fn parse_value<T: FromStr>(key: &str, raw: &str) -> CliResult<T>
where
    T::Err: fmt::Display,
{
    raw.parse::<T>()
        .map_err(|e| CliError::config(key, format!("cannot parse `{raw}`: {e}")))
}

impl Overrides {
    pub fn set(&mut self, key: &str, raw: &str) -> CliResult<()> {
        match key {
            "preset" => self.preset = Some(parse_value(key, raw)?),
            "field_tesla" => self.field_tesla = Some(parse_value(key, raw)?),
            "n" => self.n = Some(parse_value(key, raw)?),
            "l" => self.l = Some(parse_value(key, raw)?),
            "sigma0_nm" => self.sigma0_nm = Some(parse_value(key, raw)?),
            "sigma0_prime_over_c" => self.sigma0_prime_over_c = Some(parse_value(key, raw)?),
            "sigma_z_nm" => self.sigma_z_nm = Some(parse_value(key, raw)?),
            "kinetic_energy_kev" => self.kinetic_energy_kev = Some(parse_value(key, raw)?),
            "solenoid_length_cm" => self.solenoid_length_cm = Some(parse_value(key, raw)?),
            other => return Err(CliError::config(other, "unknown key")),
        }
        Ok(())
    }

    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut out = Self::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::config(
                    line,
                    format!("line {}: expected `key = value`", lineno + 1),
                ));
            };
            out.set(key.trim(), value.trim())?;
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config("--config", format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Values in `other` win.
    pub fn merged(self, other: Overrides) -> Self {
        Self {
            preset: other.preset.or(self.preset),
            field_tesla: other.field_tesla.or(self.field_tesla),
            n: other.n.or(self.n),
            l: other.l.or(self.l),
            sigma0_nm: other.sigma0_nm.or(self.sigma0_nm),
            sigma0_prime_over_c: other.sigma0_prime_over_c.or(self.sigma0_prime_over_c),
            sigma_z_nm: other.sigma_z_nm.or(self.sigma_z_nm),
            kinetic_energy_kev: other.kinetic_energy_kev.or(self.kinetic_energy_kev),
            solenoid_length_cm: other.solenoid_length_cm.or(self.solenoid_length_cm),
        }
    }

    /// Fills every key, taking unset ones from the preset and the defaults.
    pub fn resolve(&self, default_prime_over_c: f64) -> CliResult<RunConfig> {
        let preset = self.preset.unwrap_or(Preset::Tem);
        let (field, length, energy) = match preset.defaults() {
            Some((f, len, e)) => (
                self.field_tesla.unwrap_or(f),
                self.solenoid_length_cm.unwrap_or(len),
                self.kinetic_energy_kev.unwrap_or(e),
            ),
            None => (
                self.field_tesla.unwrap_or(1.0),
                self.solenoid_length_cm
                    .ok_or_else(|| CliError::config("solenoid_length_cm", "required by the custom preset"))?,
                self.kinetic_energy_kev
                    .ok_or_else(|| CliError::config("kinetic_energy_kev", "required by the custom preset"))?,
            ),
        };
        let cfg = RunConfig {
            preset,
            field_tesla: field,
            n: self.n.unwrap_or(DEFAULT_N),
            l: self.l.unwrap_or(DEFAULT_L),
            sigma0_nm: self.sigma0_nm.unwrap_or(DEFAULT_SIGMA0_NM),
            sigma0_prime_over_c: self.sigma0_prime_over_c.unwrap_or(default_prime_over_c),
            sigma_z_nm: self.sigma_z_nm.unwrap_or(DEFAULT_SIGMA_Z_NM),
            kinetic_energy_kev: energy,
            solenoid_length_cm: length,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Fully resolved scenario in user-facing units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub preset: Preset,
    pub field_tesla: f64,
    pub n: u32,
    pub l: i32,
    pub sigma0_nm: f64,
    pub sigma0_prime_over_c: f64,
    pub sigma_z_nm: f64,
    pub kinetic_energy_kev: f64,
    pub solenoid_length_cm: f64,
}

fn positive(key: &str, v: f64) -> CliResult<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(CliError::config(key, format!("must be positive and finite, got {v}")))
    }
}

impl RunConfig {
    fn validate(&self) -> CliResult<()> {
        if !self.field_tesla.is_finite() {
            return Err(CliError::config("field_tesla", "must be finite"));
        }
        if self.field_tesla == 0.0 {
            return Err(CliError::Physics(
                "field_tesla = 0: no Landau scale and no breathing in free space".into(),
            ));
        }
        positive("sigma0_nm", self.sigma0_nm)?;
        positive("sigma_z_nm", self.sigma_z_nm)?;
        positive("kinetic_energy_kev", self.kinetic_energy_kev)?;
        positive("solenoid_length_cm", self.solenoid_length_cm)?;
        if !self.sigma0_prime_over_c.is_finite() || self.sigma0_prime_over_c.abs() >= 1.0 {
            return Err(CliError::config("sigma0_prime_over_c", "must satisfy |value| < 1"));
        }
        Ok(())
    }

    /// `(key, value)` pairs in the fixed key order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        vec![
            ("preset", self.preset.name().to_string()),
            ("field_tesla", self.field_tesla.to_string()),
            ("n", self.n.to_string()),
            ("l", self.l.to_string()),
            ("sigma0_nm", self.sigma0_nm.to_string()),
            ("sigma0_prime_over_c", self.sigma0_prime_over_c.to_string()),
            ("sigma_z_nm", self.sigma_z_nm.to_string()),
            ("kinetic_energy_kev", self.kinetic_energy_kev.to_string()),
            ("solenoid_length_cm", self.solenoid_length_cm.to_string()),
        ]
    }
}
