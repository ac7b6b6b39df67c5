//! σ₀ sweeps over a preset scenario.

use std::str::FromStr;

use rayon::prelude::*;

use nslg_core::constants::{CM_PER_NM, C_LIGHT, GAUSS_PER_TESLA};
use nslg_core::observables::flight_report;
use nslg_core::{BreathingParams, FieldSpec, InitialTransverseState, QuantumNumbers, RadiationReport, Scenario};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Log,
    Linear,
}

impl Scale {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Log => "log",
            Self::Linear => "linear",
        }
    }
}

impl FromStr for Scale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "log" => Ok(Self::Log),
            "linear" => Ok(Self::Linear),
            other => Err(format!("unknown scale `{other}` (expected log or linear)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub sigma0_min_nm: f64,
    pub sigma0_max_nm: f64,
    pub points: usize,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn new(sigma0_min_nm: f64, sigma0_max_nm: f64, points: usize, scale: Scale) -> CliResult<Self> {
        if !(sigma0_min_nm > 0.0 && sigma0_min_nm.is_finite()) {
            return Err(CliError::config(
                "sigma0_min_nm",
                format!("must be positive, got {sigma0_min_nm}"),
            ));
        }
        if !(sigma0_max_nm >= sigma0_min_nm && sigma0_max_nm.is_finite()) {
            return Err(CliError::config(
                "sigma0_max_nm",
                format!("must be finite and at least sigma0_min_nm, got {sigma0_max_nm}"),
            ));
        }
        if points < 2 {
            return Err(CliError::config("points", format!("must be at least 2, got {points}")));
        }
        Ok(Self {
            sigma0_min_nm,
            sigma0_max_nm,
            points,
            scale,
        })
    }

    /// σ₀ grid in nm; the endpoints are exact.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.sigma0_min_nm;
                }
                if i + 1 == self.points {
                    return self.sigma0_max_nm;
                }
                let f = i as f64 / last;
                match self.scale {
                    Scale::Linear => self.sigma0_min_nm + f * (self.sigma0_max_nm - self.sigma0_min_nm),
                    Scale::Log => (self.sigma0_min_nm.ln() + f * (self.sigma0_max_nm / self.sigma0_min_nm).ln()).exp(),
                }
            })
            .collect()
    }

    pub fn entries(&self) -> Vec<(&'static str, String)> {
        vec![
            ("sigma0_min_nm", self.sigma0_min_nm.to_string()),
            ("sigma0_max_nm", self.sigma0_max_nm.to_string()),
            ("points", self.points.to_string()),
            ("scale", self.scale.name().to_string()),
        ]
    }
}

pub const CSV_COLUMNS: [&str; 12] = [
    "sigma0_nm",
    "sigma_st_nm",
    "s_sign",
    "power_ev_per_s",
    "dLz_dt_hbar_per_s",
    "E_rad_per_period_ev",
    "E_perp_ev",
    "ratio",
    "total_energy_ev",
    "total_dLz_hbar",
    "photon_count",
    "oam_quantum_loss_time_s",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub sigma0_nm: f64,
    pub report: RadiationReport,
}

impl CsvRow {
    pub fn format(&self) -> String {
        let r = &self.report;
        let v = [
            self.sigma0_nm,
            r.sigma_st_nm,
            f64::NAN,
            r.avg_power_ev_per_s,
            r.avg_dlz_dt_hbar_per_s,
            r.e_rad_per_period_ev,
            r.e_perp_ev,
            r.ratio,
            r.total_energy_ev,
            r.total_dlz_hbar,
            r.photon_count,
            r.oam_quantum_loss_time,
        ];
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if i == 2 {
                    r.s_sign.to_string()
                } else {
                    format!("{x:.8e}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl RunConfig {
    pub fn field_gauss(&self) -> f64 {
        self.field_tesla * GAUSS_PER_TESLA
    }

    pub fn quantum(&self) -> QuantumNumbers {
        QuantumNumbers::new(self.n, self.l)
    }

    pub fn scenario(&self) -> CliResult<Scenario> {
        Ok(Scenario::new(
            FieldSpec::from_tesla(self.field_tesla),
            self.solenoid_length_cm,
            self.kinetic_energy_kev * 1e3,
        )?)
    }

    pub fn breathing_at(&self, sigma0_nm: f64) -> CliResult<BreathingParams> {
        let init = InitialTransverseState::new(sigma0_nm * CM_PER_NM, self.sigma0_prime_over_c * C_LIGHT)?;
        Ok(BreathingParams::new(init, self.field_gauss())?)
    }
}

/// One row per grid point, computed in parallel and returned in grid order.
pub fn sweep_rows(cfg: &RunConfig, spec: &SweepSpec) -> CliResult<Vec<CsvRow>> {
    let scenario = cfg.scenario()?;
    let q = cfg.quantum();
    spec.grid()
        .par_iter()
        .map(|&s0| {
            let bp = cfg.breathing_at(s0)?;
            Ok(CsvRow {
                sigma0_nm: s0,
                report: flight_report(&scenario, q, &bp),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Overrides;

    #[test]
    fn grid_endpoints_and_spacing() {
        let s = SweepSpec::new(1.0, 1e6, 7, Scale::Log).unwrap();
        let g = s.grid();
        assert_eq!(g[0], 1.0);
        assert_eq!(g[6], 1e6);
        assert!((g[1] - 10.0).abs() < 1e-12);
        let lin = SweepSpec::new(2.0, 4.0, 3, Scale::Linear).unwrap().grid();
        assert_eq!(lin, vec![2.0, 3.0, 4.0]);
        assert!(SweepSpec::new(0.0, 1.0, 3, Scale::Log).is_err());
        assert!(SweepSpec::new(1.0, 2.0, 1, Scale::Log).is_err());
    }

    #[test]
    fn rows_follow_grid_order() {
        let cfg = Overrides::default().resolve(-3.1e-4).unwrap();
        let spec = SweepSpec::new(1.0, 1e5, 16, Scale::Log).unwrap();
        let rows = sweep_rows(&cfg, &spec).unwrap();
        let got: Vec<f64> = rows.iter().map(|r| r.sigma0_nm).collect();
        assert_eq!(got, spec.grid());
        assert_eq!(rows[0].format().split(',').count(), CSV_COLUMNS.len());
    }
}
