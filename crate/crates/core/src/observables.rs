//! Period-averaged radiation observables in closed form, plus flight totals.

use std::f64::consts::PI;

use crate::constants::{energy_to_velocity, erg_to_ev, FieldSpec, CM_PER_NM, C_LIGHT, E_CHARGE, HBAR, MU_B};
use crate::dynamics::{BreathingParams, QuantumNumbers};
use crate::error::{invalid, Result};

/// Solid-angle integral of (1 + cos²θ) sin²θ.
pub const ANGULAR_SHAPE_INTEGRAL: f64 = 16.0 * PI / 5.0;

/// Solenoid and beam context of a flight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub field: FieldSpec,
    /// cm
    pub solenoid_length: f64,
    pub kinetic_energy_ev: f64,
    /// cm/s
    pub velocity: f64,
}

impl Scenario {
    pub fn new(field: FieldSpec, solenoid_length: f64, kinetic_energy_ev: f64) -> Result<Self> {
        if !(solenoid_length > 0.0 && solenoid_length.is_finite()) {
            return Err(invalid(
                "solenoid_length",
                format!("must be positive, got {solenoid_length}"),
            ));
        }
        if !(kinetic_energy_ev > 0.0 && kinetic_energy_ev.is_finite()) {
            return Err(invalid(
                "kinetic_energy",
                format!("must be positive, got {kinetic_energy_ev}"),
            ));
        }
        Ok(Self {
            field,
            solenoid_length,
            kinetic_energy_ev,
            velocity: energy_to_velocity(kinetic_energy_ev),
        })
    }

    /// Electron-microscope column: 1 T, 20 cm, 200 keV.
    pub fn tem() -> Self {
        Self::new(FieldSpec::from_tesla(1.0), 20.0, 200.0e3).expect("valid preset")
    }

    /// One kilometre of linac solenoid at 1 T with a 1 GeV (v ≈ c) electron.
    pub fn linac_1km() -> Self {
        Self::new(FieldSpec::from_tesla(1.0), 1.0e5, 1.0e9).expect("valid preset")
    }

    pub fn flight_time(&self) -> f64 {
        self.solenoid_length / self.velocity
    }
}

fn common_factor(q: QuantumNumbers, bp: &BreathingParams) -> f64 {
    let g = q.degeneracy();
    let s = f64::from(bp.s_sign);
    g * g * s * s * E_CHARGE * E_CHARGE * bp.width_excess_fourth() / C_LIGHT.powi(5)
}

/// ⟨P⟩ = g² 𝔰² ω_c⁶ e² (σ_st⁴ − σ_L⁴) / (40 c⁵), erg/s.
pub fn avg_power(q: QuantumNumbers, bp: &BreathingParams) -> f64 {
    common_factor(q, bp) * bp.omega_c.powi(6) / 40.0
}

/// ⟨dL_z/dt⟩ = g² 𝔰² ω_c⁵ e² (σ_st⁴ − σ_L⁴) / (120 c⁵), erg. Odd in H.
pub fn avg_oam_rate(q: QuantumNumbers, bp: &BreathingParams) -> f64 {
    common_factor(q, bp) * bp.omega_c.powi(5) / 120.0
}

/// The closed-form angular distribution as it is usually quoted: the ⟨P⟩
/// prefactor times (1 + cos²θ) sin²θ, erg/(s·sr).
///
/// Its solid-angle integral is 16π/5 × ⟨P⟩, not ⟨P⟩; the quadrature oracle
/// shows that the direct integral of the far Poynting flux equals ⟨P⟩. Use
/// [`angular_power_distribution_normalized`] for a distribution that
/// integrates to the radiated power.
pub fn angular_power_distribution(theta: f64, q: QuantumNumbers, bp: &BreathingParams) -> f64 {
    avg_power(q, bp) * angular_shape(theta)
}

/// (1 + cos²θ) sin²θ scaled to integrate to ⟨P⟩ over the sphere.
pub fn angular_power_distribution_normalized(theta: f64, q: QuantumNumbers, bp: &BreathingParams) -> f64 {
    avg_power(q, bp) * angular_shape(theta) / ANGULAR_SHAPE_INTEGRAL
}

pub fn angular_shape(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    (1.0 + c * c) * s * s
}

/// Expectation of the transverse energy, erg:
/// (ħ|ω_c|/2)(2n+|l|+1)(σ_st/σ_L)² + l μ_B H.
pub fn transverse_energy(q: QuantumNumbers, bp: &BreathingParams, field_gauss: f64) -> f64 {
    let width_ratio = (bp.sigma_st / bp.sigma_l).powi(2);
    0.5 * HBAR * bp.omega_c.abs() * q.degeneracy() * width_ratio + f64::from(q.l) * MU_B * field_gauss
}

/// Averaged observables and their totals over one pass through the solenoid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiationReport {
    pub sigma_st_nm: f64,
    pub s_sign: i8,
    pub avg_power_erg_per_s: f64,
    pub avg_power_ev_per_s: f64,
    /// erg
    pub avg_dlz_dt: f64,
    pub avg_dlz_dt_hbar_per_s: f64,
    pub e_rad_per_period_ev: f64,
    pub e_perp_ev: f64,
    /// E_rad per period over E⊥
    pub ratio: f64,
    pub flight_time: f64,
    pub total_energy_ev: f64,
    /// total radiated energy over E⊥
    pub cumulative_ratio: f64,
    pub total_dlz_hbar: f64,
    pub photon_count: f64,
    /// ħ/|⟨dL_z/dt⟩|; +∞ when nothing radiates
    pub oam_quantum_loss_time: f64,
}

pub fn flight_report(scenario: &Scenario, q: QuantumNumbers, bp: &BreathingParams) -> RadiationReport {
    let power = avg_power(q, bp);
    let dlz = avg_oam_rate(q, bp);
    let period = bp.period();
    let t_flight = scenario.flight_time();
    let e_perp = transverse_energy(q, bp, scenario.field.gauss);
    let total = power * t_flight;
    let quantum = HBAR * bp.omega_c.abs();
    RadiationReport {
        sigma_st_nm: bp.sigma_st / CM_PER_NM,
        s_sign: bp.s_sign,
        avg_power_erg_per_s: power,
        avg_power_ev_per_s: erg_to_ev(power),
        avg_dlz_dt: dlz,
        avg_dlz_dt_hbar_per_s: dlz / HBAR,
        e_rad_per_period_ev: erg_to_ev(power * period),
        e_perp_ev: erg_to_ev(e_perp),
        ratio: power * period / e_perp,
        flight_time: t_flight,
        total_energy_ev: erg_to_ev(total),
        cumulative_ratio: total / e_perp,
        total_dlz_hbar: dlz * t_flight / HBAR,
        photon_count: total / quantum,
        oam_quantum_loss_time: if dlz == 0.0 { f64::INFINITY } else { HBAR / dlz.abs() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::landau_width;
    use crate::dynamics::InitialTransverseState;
    use approx::assert_relative_eq;

    fn params(s0: f64, prime: f64, h: f64) -> BreathingParams {
        BreathingParams::new(InitialTransverseState::new(s0, prime).unwrap(), h).unwrap()
    }

    #[test]
    fn landau_state_is_silent() {
        let sl = landau_width(1e4).unwrap();
        let bp = params(sl, 0.0, 1e4);
        let q = QuantumNumbers::new(2, 5);
        assert_eq!(avg_power(q, &bp), 0.0);
        assert_eq!(avg_oam_rate(q, &bp), 0.0);
        let rep = flight_report(&Scenario::tem(), q, &bp);
        assert_eq!(rep.oam_quantum_loss_time, f64::INFINITY);
        assert_eq!(rep.photon_count, 0.0);
    }

    #[test]
    fn power_to_oam_ratio_is_three_omega() {
        let bp = params(2e-5, 3e-5 * C_LIGHT, -2.5e4);
        let q = QuantumNumbers::new(1, -7);
        let ratio = avg_power(q, &bp) / avg_oam_rate(q, &bp);
        assert_relative_eq!(ratio, 3.0 * bp.omega_c, max_relative = 4.0 * f64::EPSILON);
    }

    #[test]
    fn degeneracy_squared_scaling() {
        let bp = params(2e-5, 0.0, 1e4);
        let p2 = avg_power(QuantumNumbers::new(0, 2), &bp);
        let p0 = avg_power(QuantumNumbers::new(0, 0), &bp);
        assert_relative_eq!(p2 / p0, 9.0, max_relative = 1e-14);
    }

    #[test]
    fn sixth_power_in_omega_at_frozen_widths() {
        let mut bp = params(2e-5, 1e-5 * C_LIGHT, 1e4);
        let q = QuantumNumbers::new(0, 1);
        let p1 = avg_power(q, &bp);
        bp.omega_c *= 2.0;
        assert_relative_eq!(avg_power(q, &bp) / p1, 64.0, max_relative = 1e-14);
    }

    #[test]
    fn field_reversal_parity() {
        let q = QuantumNumbers::new(0, 10);
        let a = params(5e-4, 0.0, 1e4);
        let b = params(5e-4, 0.0, -1e4);
        assert_relative_eq!(avg_power(q, &a), avg_power(q, &b), max_relative = 1e-14);
        assert_relative_eq!(avg_oam_rate(q, &a), -avg_oam_rate(q, &b), max_relative = 1e-14);
        assert_eq!(avg_oam_rate(q, &a).signum(), a.omega_c.signum());
    }

    #[test]
    fn angular_profile() {
        let bp = params(2e-5, 1e-5 * C_LIGHT, 1e4);
        let q = QuantumNumbers::new(0, 3);
        assert!(angular_power_distribution(0.0, q, &bp).abs() < 1e-30);
        assert!(angular_power_distribution(PI, q, &bp).abs() < 1e-30 * avg_power(q, &bp).max(1.0));
        let peak = angular_power_distribution(PI / 2.0, q, &bp);
        for th in [0.3, 1.0, 1.5, 2.0, 2.9] {
            assert!(angular_power_distribution(th, q, &bp) <= peak);
            assert_relative_eq!(
                angular_power_distribution(th, q, &bp),
                angular_power_distribution(PI - th, q, &bp),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn ground_landau_transverse_energy() {
        let sl = landau_width(1e4).unwrap();
        let bp = params(sl, 0.0, 1e4);
        let e = transverse_energy(QuantumNumbers::new(0, 0), &bp, 1e4);
        assert_relative_eq!(e, 0.5 * HBAR * bp.omega_c.abs(), max_relative = 1e-14);
        let plus = transverse_energy(QuantumNumbers::new(0, 3), &bp, 1e4);
        let minus = transverse_energy(QuantumNumbers::new(0, -3), &bp, 1e4);
        assert_relative_eq!(plus - minus, 6.0 * MU_B * 1e4, max_relative = 1e-12);
        let flipped = transverse_energy(QuantumNumbers::new(0, 3), &bp, -1e4);
        assert_relative_eq!(flipped, minus, max_relative = 1e-12);
    }

    #[test]
    fn tem_flight_time() {
        let t = Scenario::tem().flight_time();
        assert!((t - 0.96e-9).abs() < 0.01e-9, "{t}");
        let t = Scenario::linac_1km().flight_time();
        assert!((t - 3.336e-6).abs() < 0.001e-6, "{t}");
    }
}
