//! Physical constants in Gaussian CGS units (electron charge negative) and
//! the handful of unit conversions used at the I/O boundary.
//!
//! Values are CODATA 2018.

/// Electron charge, statcoulomb. Negative by convention.
pub const E_CHARGE: f64 = -4.803_204_712_570_263e-10;
/// Electron mass, gram.
pub const M_ELECTRON: f64 = 9.109_383_701_5e-28;
/// Speed of light, cm/s.
pub const C_LIGHT: f64 = 2.997_924_58e10;
/// Reduced Planck constant, erg·s.
pub const HBAR: f64 = 1.054_571_817e-27;
/// Reduced Compton wavelength ħ/(mc), cm.
pub const LAMBDA_C: f64 = HBAR / (M_ELECTRON * C_LIGHT);
/// Bohr magneton |e|ħ/(2mc), erg/gauss.
pub const MU_B: f64 = -E_CHARGE * HBAR / (2.0 * M_ELECTRON * C_LIGHT);
/// One electronvolt in erg.
pub const ERG_PER_EV: f64 = 1.602_176_634e-12;
/// Electron rest energy, eV.
pub const ELECTRON_REST_ENERGY_EV: f64 = M_ELECTRON * C_LIGHT * C_LIGHT / ERG_PER_EV;

pub const GAUSS_PER_TESLA: f64 = 1.0e4;
pub const CM_PER_NM: f64 = 1.0e-7;

/// The constant set as a value, for callers that want to pass it around.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub e_charge: f64,
    pub m_electron: f64,
    pub c_light: f64,
    pub hbar: f64,
    pub lambda_c: f64,
    pub mu_b: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: Self = Self {
        e_charge: E_CHARGE,
        m_electron: M_ELECTRON,
        c_light: C_LIGHT,
        hbar: HBAR,
        lambda_c: LAMBDA_C,
        mu_b: MU_B,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

/// Uniform longitudinal field. Internally gauss, signed z-projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSpec {
    pub gauss: f64,
}

impl FieldSpec {
    pub fn from_tesla(tesla: f64) -> Self {
        Self {
            gauss: tesla * GAUSS_PER_TESLA,
        }
    }

    pub fn tesla(&self) -> f64 {
        self.gauss / GAUSS_PER_TESLA
    }
}

/// Signed cyclotron frequency eH/(mc), rad/s. Negative for H > 0.
pub fn cyclotron_frequency(field_gauss: f64) -> f64 {
    E_CHARGE * field_gauss / (M_ELECTRON * C_LIGHT)
}

/// Cyclotron period 2π/|ω_c|, s. Infinite at zero field.
pub fn cyclotron_period(field_gauss: f64) -> f64 {
    2.0 * std::f64::consts::PI / cyclotron_frequency(field_gauss).abs()
}

/// R.m.s. radius of the n = l = 0 Landau state, sqrt(2ħc/|eH|), cm.
pub fn landau_width(field_gauss: f64) -> crate::Result<f64> {
    if field_gauss == 0.0 || !field_gauss.is_finite() {
        return Err(crate::Error::ZeroField);
    }
    Ok((2.0 * HBAR * C_LIGHT / (E_CHARGE * field_gauss).abs()).sqrt())
}

/// Relativistic speed for a kinetic energy in eV, cm/s.
pub fn energy_to_velocity(kinetic_ev: f64) -> f64 {
    let gamma = 1.0 + kinetic_ev / ELECTRON_REST_ENERGY_EV;
    C_LIGHT * (1.0 - 1.0 / (gamma * gamma)).sqrt()
}

/// Relativistic momentum γmv for a kinetic energy in eV, g·cm/s.
pub fn energy_to_momentum(kinetic_ev: f64) -> f64 {
    let gamma = 1.0 + kinetic_ev / ELECTRON_REST_ENERGY_EV;
    M_ELECTRON * C_LIGHT * (gamma * gamma - 1.0).sqrt()
}

pub fn erg_to_ev(erg: f64) -> f64 {
    erg / ERG_PER_EV
}

pub fn ev_to_erg(ev: f64) -> f64 {
    ev * ERG_PER_EV
}
