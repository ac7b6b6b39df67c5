//! Subcommand bodies. Each returns the complete output text so that the
//! caller writes it in one piece.

use std::f64::consts::PI;
use std::fmt::Write as _;

use nslg_core::constants::{erg_to_ev, CM_PER_NM, HBAR};
use nslg_core::fringe::{adiabatic_check, transit_observables, FringeScenario};
use nslg_core::observables::{angular_power_distribution, angular_power_distribution_normalized, angular_shape};
use nslg_core::verify::run_verification;
use nslg_core::LongitudinalPacket;

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::sweep::{sweep_rows, SweepSpec, CSV_COLUMNS};

fn header(out: &mut String, command: &str, entries: &[(&str, String)]) {
    let _ = writeln!(out, "# nslg {command}");
    for (k, v) in entries {
        let _ = writeln!(out, "# {k} = {v}");
    }
}

/// CSV for `power-sweep`, `oam-sweep` and `ratio-sweep`; all three share
/// one column layout.
pub fn sweep_csv(command: &str, cfg: &RunConfig, spec: &SweepSpec) -> CliResult<String> {
    let rows = sweep_rows(cfg, spec)?;
    let mut out = String::new();
    let mut entries = cfg.entries();
    entries.extend(spec.entries());
    header(&mut out, command, &entries);
    let _ = writeln!(out, "{}", CSV_COLUMNS.join(","));
    for row in rows {
        let _ = writeln!(out, "{}", row.format());
    }
    Ok(out)
}

pub fn angular_csv(cfg: &RunConfig, points: usize) -> CliResult<String> {
    if points < 2 {
        return Err(CliError::config("points", format!("must be at least 2, got {points}")));
    }
    let bp = cfg.breathing_at(cfg.sigma0_nm)?;
    let q = cfg.quantum();
    let mut out = String::new();
    let mut entries = cfg.entries();
    entries.push(("points", points.to_string()));
    header(&mut out, "angular", &entries);
    let _ = writeln!(
        out,
        "theta_rad,shape,dP_dOmega_raw_erg_per_s_sr,dP_dOmega_normalized_erg_per_s_sr"
    );
    for i in 0..points {
        let theta = if i + 1 == points {
            PI
        } else {
            PI * i as f64 / (points - 1) as f64
        };
        let _ = writeln!(
            out,
            "{:.8e},{:.8e},{:.8e},{:.8e}",
            theta,
            angular_shape(theta),
            angular_power_distribution(theta, q, &bp),
            angular_power_distribution_normalized(theta, q, &bp)
        );
    }
    Ok(out)
}

/// Fringe report plus an optional warning for non-adiabatic geometry.
pub fn fringe_report(cfg: &RunConfig, diameter_cm: f64, radius_cm: f64) -> CliResult<(String, Option<String>)> {
    if !(radius_cm > 0.0 && radius_cm.is_finite()) {
        return Err(CliError::config(
            "radius_cm",
            format!("must be positive, got {radius_cm}"),
        ));
    }
    let fs = FringeScenario::from_solenoid(diameter_cm, cfg.field_gauss())?;
    let bp = cfg.breathing_at(cfg.sigma0_nm)?;
    let pkt = LongitudinalPacket::from_kinetic_energy(cfg.kinetic_energy_kev * 1e3, cfg.sigma_z_nm * CM_PER_NM)?;
    let check = adiabatic_check(&fs);
    let obs = transit_observables(&fs, cfg.quantum(), &bp, &pkt, radius_cm)?;

    let mut out = String::new();
    let mut entries = cfg.entries();
    entries.push(("diameter_cm", diameter_cm.to_string()));
    entries.push(("radius_cm", radius_cm.to_string()));
    header(&mut out, "fringe", &entries);
    let _ = writeln!(out, "quantity,value,unit");
    let rows: [(&str, f64, &str); 12] = [
        ("transit_time", fs.transit_time, "s"),
        ("omega_c_T", fs.omega_t(), "rad"),
        ("adiabatic_ratio", check.ratio, "1"),
        ("fresnel_argument", obs.fresnel_argument, "1"),
        ("fresnel_C", obs.fresnel_value, "1"),
        ("bracket", obs.bracket, "1"),
        ("power", erg_to_ev(obs.power), "eV/s"),
        ("dLz_dt_interference", obs.dlz_interference / HBAR, "hbar/s"),
        ("dLz_dt_p0", obs.dlz_p0 / HBAR, "hbar/s"),
        ("dLz_dt_radiative", obs.dlz_radiative / HBAR, "hbar/s"),
        ("radius", obs.radius, "cm"),
        ("adiabatic", if check.adiabatic { 1.0 } else { 0.0 }, "bool"),
    ];
    for (name, value, unit) in rows {
        let _ = writeln!(out, "{name},{value:.8e},{unit}");
    }
    let warning = (!check.adiabatic).then(|| {
        format!(
            "warning: fringe is not adiabatic (|dω_c/dt|/ω_c² = {:.3e}); transit-averaged results are outside their range of validity",
            check.ratio
        )
    });
    Ok((out, warning))
}

/// Verification report text, overall pass flag and the number of failed cases.
pub fn verify_report(seed: u64, cases: usize) -> CliResult<(String, bool, usize)> {
    let report = run_verification(seed, cases)?;
    let failed = report.cases.iter().filter(|c| !c.passed()).count();
    Ok((report.render(), report.passed(), failed))
}
