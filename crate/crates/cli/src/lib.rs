//! Command-line front end: scenario configs, σ₀ sweeps, angular and fringe
//! reports, and the randomized verification suite.

pub mod commands;
pub mod config;
pub mod error;
pub mod sweep;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Overrides, Preset};
use crate::error::{CliError, CliResult};
use crate::sweep::{Scale, SweepSpec};

/// σ₀′/c used by `power-sweep` when none is given.
pub const POWER_SWEEP_PRIME_OVER_C: f64 = -3.1e-4;

#[derive(Debug, Parser)]
#[command(
    name = "nslg",
    version,
    about = "Radiation of breathing vortex-electron packets in a solenoid"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Period-averaged power against σ₀.
    PowerSweep(SweepArgs),
    /// Period-averaged OAM loss rate against σ₀.
    OamSweep(SweepArgs),
    /// Radiated energy per period over transverse energy against σ₀.
    RatioSweep(SweepArgs),
    /// Angular distribution of the averaged power.
    Angular {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Number of θ samples over [0, π].
        #[arg(long, default_value_t = 181)]
        resolution: usize,
    },
    /// Transit-averaged observables through a solenoid fringe.
    Fringe {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Solenoid diameter, cm.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        diameter_cm: f64,
        /// Observation radius for the radiative term, cm.
        #[arg(long, default_value_t = 100.0, allow_negative_numbers = true)]
        radius_cm: f64,
    },
    /// Closed forms against brute-force quadrature on random parameter sets.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cases: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ScenarioArgs {
    /// Flat `key = value` scenario file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub preset: Option<Preset>,
    #[arg(long, allow_negative_numbers = true)]
    pub field_tesla: Option<f64>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma0_nm: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma0_prime_over_c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma_z_nm: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub kinetic_energy_kev: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub solenoid_length_cm: Option<f64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl ScenarioArgs {
    pub fn overrides(&self) -> CliResult<Overrides> {
        let file = match &self.config {
            Some(path) => Overrides::load(path)?,
            None => Overrides::default(),
        };
        let flags = Overrides {
            preset: self.preset,
            field_tesla: self.field_tesla,
            n: self.n,
            l: self.l,
            sigma0_nm: self.sigma0_nm,
            sigma0_prime_over_c: self.sigma0_prime_over_c,
            sigma_z_nm: self.sigma_z_nm,
            kinetic_energy_kev: self.kinetic_energy_kev,
            solenoid_length_cm: self.solenoid_length_cm,
        };
        Ok(file.merged(flags))
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub sigma0_min_nm: f64,
    #[arg(long, default_value_t = 1.0e6, allow_negative_numbers = true)]
    pub sigma0_max_nm: f64,
    #[arg(long, default_value_t = 300)]
    pub points: usize,
    #[arg(long, default_value = "log")]
    pub scale: Scale,
}

impl SweepArgs {
    pub fn spec(&self) -> CliResult<SweepSpec> {
        SweepSpec::new(self.sigma0_min_nm, self.sigma0_max_nm, self.points, self.scale)
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn run_sweep(name: &str, args: &SweepArgs, default_prime: f64) -> CliResult<()> {
    let cfg = args.scenario.overrides()?.resolve(default_prime)?;
    let text = commands::sweep_csv(name, &cfg, &args.spec()?)?;
    emit(&args.scenario.out, &text)
}

/// Runs one subcommand. Warnings go to stderr; the result maps to the exit code.
pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::PowerSweep(args) => run_sweep("power-sweep", &args, POWER_SWEEP_PRIME_OVER_C),
        Command::OamSweep(args) => run_sweep("oam-sweep", &args, 0.0),
        Command::RatioSweep(args) => run_sweep("ratio-sweep", &args, 0.0),
        Command::Angular { scenario, resolution } => {
            let cfg = scenario.overrides()?.resolve(POWER_SWEEP_PRIME_OVER_C)?;
            emit(&scenario.out, &commands::angular_csv(&cfg, resolution)?)
        }
        Command::Fringe {
            scenario,
            diameter_cm,
            radius_cm,
        } => {
            let cfg = scenario.overrides()?.resolve(0.0)?;
            let (text, warning) = commands::fringe_report(&cfg, diameter_cm, radius_cm)?;
            if let Some(w) = warning {
                eprintln!("{w}");
            }
            emit(&scenario.out, &text)
        }
        Command::Verify { seed, cases, out } => {
            if cases == 0 {
                return Err(CliError::config("cases", "must be at least 1"));
            }
            let (text, passed, failed) = commands::verify_report(seed, cases)?;
            emit(&out, &text)?;
            if passed {
                Ok(())
            } else {
                Err(CliError::Verification { failed, total: cases })
            }
        }
    }
}
