use crate::constants::{cyclotron_frequency, energy_to_velocity, C_LIGHT, HBAR, LAMBDA_C, M_ELECTRON};
use crate::dynamics::{rho_sq_all, BreathingParams, InitialTransverseState, QuantumNumbers};
use crate::error::{invalid, Result};

/// Free Gaussian packet along z with mean momentum p₀ and waist σ_z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LongitudinalPacket {
    /// g·cm/s
    pub p0: f64,
    /// cm
    pub sigma_z: f64,
}

impl LongitudinalPacket {
    pub fn new(p0: f64, sigma_z: f64) -> Result<Self> {
        if !(sigma_z > 0.0 && sigma_z.is_finite()) {
            return Err(invalid(
                "sigma_z",
                format!("must be positive and finite, got {sigma_z}"),
            ));
        }
        if !p0.is_finite() {
            return Err(invalid("p0", "must be finite"));
        }
        Ok(Self { p0, sigma_z })
    }

    /// Packet whose centroid moves at the relativistic speed of an electron
    /// with the given kinetic energy, p₀ = m v.
    pub fn from_kinetic_energy(kinetic_ev: f64, sigma_z: f64) -> Result<Self> {
        if !(kinetic_ev >= 0.0 && kinetic_ev.is_finite()) {
            return Err(invalid(
                "kinetic_energy",
                format!("must be non-negative, got {kinetic_ev}"),
            ));
        }
        Self::new(M_ELECTRON * energy_to_velocity(kinetic_ev), sigma_z)
    }

    /// Diffraction time σ_z²/(cλ_C).
    pub fn diffraction_time(&self) -> f64 {
        self.sigma_z * self.sigma_z / (C_LIGHT * LAMBDA_C)
    }

    /// Momentum spread ħ/σ_z.
    pub fn sigma_p(&self) -> f64 {
        HBAR / self.sigma_z
    }

    /// w²(t) = σ_z² + ħ²t²/(m²σ_z²); the density variance is w²/2.
    pub fn width_sq(&self, t: f64) -> f64 {
        let spread = HBAR * t / (M_ELECTRON * self.sigma_z);
        self.sigma_z * self.sigma_z + spread * spread
    }

    pub fn centroid(&self, t: f64) -> f64 {
        self.p0 * t / M_ELECTRON
    }

    /// Unit-normalized |ψ∥(z, t)|², 1/cm.
    pub fn density(&self, z: f64, t: f64) -> f64 {
        let w_sq = self.width_sq(t);
        let zt = z - self.centroid(t);
        (-zt * zt / w_sq).exp() / (std::f64::consts::PI * w_sq).sqrt()
    }

    /// Momentum-space normalization N∥ = sqrt(σ_z/(2π^{3/2}))/ħ.
    pub fn momentum_normalization(&self) -> f64 {
        (self.sigma_z / (2.0 * std::f64::consts::PI.powf(1.5))).sqrt() / HBAR
    }
}

/// Complete description of a radiating packet in a uniform field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketState {
    pub quantum: QuantumNumbers,
    pub breathing: BreathingParams,
    pub longitudinal: LongitudinalPacket,
    /// gauss, signed
    pub field_gauss: f64,
}

impl PacketState {
    pub fn new(
        quantum: QuantumNumbers,
        init: InitialTransverseState,
        longitudinal: LongitudinalPacket,
        field_gauss: f64,
    ) -> Result<Self> {
        let breathing = BreathingParams::new(init, field_gauss)?;
        Ok(Self {
            quantum,
            breathing,
            longitudinal,
            field_gauss,
        })
    }

    pub fn omega_c(&self) -> f64 {
        cyclotron_frequency(self.field_gauss)
    }

    pub fn degeneracy(&self) -> f64 {
        self.quantum.degeneracy()
    }

    /// [ϱ², ∂_tϱ², ∂_t²ϱ², ∂_t³ϱ²] at time t.
    pub fn rho_sq_derivs(&self, t: f64) -> [f64; 4] {
        rho_sq_all(t, self.quantum, &self.breathing)
    }
}
