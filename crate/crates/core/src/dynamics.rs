//! Breathing optical functions of a nonstationary Laguerre-Gaussian packet
//! in a uniform longitudinal field.
//!
//! The width deviation oscillates as
//!
//! ```text
//! σ²(t) = σ_st² (1 + A sin(𝔰|ω_c| t − ϑ)),   A = sqrt(1 − (σ_L/σ_st)⁴)
//! ```
//!
//! and the mean-square radius is ϱ²(t) = (2n + |l| + 1) σ²(t).

use crate::constants::{cyclotron_frequency, landau_width, C_LIGHT, LAMBDA_C};
use crate::error::{invalid, Result};
use crate::real::Real;

/// Relative tolerance under which σ₀ is taken to equal σ_L.
pub const LANDAU_MATCH_RTOL: f64 = 1e-12;

/// Radial and orbital quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: i32) -> Self {
        Self { n, l }
    }

    /// 2n + |l| + 1.
    pub fn degeneracy(&self) -> f64 {
        f64::from(2 * self.n + self.l.unsigned_abs() + 1)
    }
}

/// Width and width rate with which the packet enters the field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialTransverseState {
    /// cm
    pub sigma0: f64,
    /// cm/s
    pub sigma0_prime: f64,
}

impl InitialTransverseState {
    pub fn new(sigma0: f64, sigma0_prime: f64) -> Result<Self> {
        if !(sigma0 > 0.0 && sigma0.is_finite()) {
            return Err(invalid("sigma0", format!("must be positive and finite, got {sigma0}")));
        }
        if !sigma0_prime.is_finite() {
            return Err(invalid("sigma0_prime", "must be finite"));
        }
        Ok(Self { sigma0, sigma0_prime })
    }
}

/// Expansion/contraction selector: sign(σ₀′), else sign(σ_L − σ₀), else 0.
pub fn sign_function(sigma0: f64, sigma0_prime: f64, sigma_l: f64) -> i8 {
    if sigma0_prime != 0.0 {
        return if sigma0_prime > 0.0 { 1 } else { -1 };
    }
    let gap = sigma_l - sigma0;
    if gap.abs() <= LANDAU_MATCH_RTOL * sigma_l {
        0
    } else if gap > 0.0 {
        1
    } else {
        -1
    }
}

/// Everything needed to evaluate σ(t) and ϱ²(t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BreathingParams {
    pub sigma_st: f64,
    pub theta_phase: f64,
    pub s_sign: i8,
    pub sigma_l: f64,
    /// Signed, eH/(mc).
    pub omega_c: f64,
    pub amplitude: f64,
    /// σ_st² − σ_L², kept separately to avoid cancellation near the Landau state.
    excess_sq: f64,
}

impl BreathingParams {
    pub fn new(init: InitialTransverseState, field_gauss: f64) -> Result<Self> {
        let sigma_l = landau_width(field_gauss)?;
        let omega_c = cyclotron_frequency(field_gauss);
        let s_sign = sign_function(init.sigma0, init.sigma0_prime, sigma_l);
        if s_sign == 0 {
            return Ok(Self::landau(sigma_l, omega_c));
        }

        let s0 = init.sigma0;
        let s0_sq = s0 * s0;
        let sl_sq = sigma_l * sigma_l;
        // K = σ₀′σ_L²/(cλ_C); then σ_st² = (σ₀² + σ_L⁴/σ₀² + K²)/2
        let k = init.sigma0_prime * sl_sq / (C_LIGHT * LAMBDA_C);
        let mismatch = s0 - sl_sq / s0;
        let excess_sq = 0.5 * (mismatch * mismatch + k * k);
        let sigma_st_sq = sl_sq + excess_sq;
        let fourth = excess_sq * (sigma_st_sq + sl_sq);
        if fourth <= 0.0 {
            return Ok(Self::landau(sigma_l, omega_c));
        }
        let root = fourth.sqrt();
        let amplitude = root / sigma_st_sq;
        // σ_st² − σ₀² = (σ_L⁴/σ₀² + K² − σ₀²)/2
        let above_start = 0.5 * ((sl_sq / s0) * (sl_sq / s0) + k * k - s0_sq);
        // sin ϑ from σ(0) = σ₀, cos ϑ from σ′(0) = σ₀′
        let w = f64::from(s_sign) * omega_c.abs();
        let theta_phase = above_start.atan2(2.0 * s0 * init.sigma0_prime / w);
        Ok(Self {
            sigma_st: sigma_st_sq.sqrt(),
            theta_phase,
            s_sign,
            sigma_l,
            omega_c,
            amplitude,
            excess_sq,
        })
    }

    fn landau(sigma_l: f64, omega_c: f64) -> Self {
        Self {
            sigma_st: sigma_l,
            theta_phase: 0.0,
            s_sign: 0,
            sigma_l,
            omega_c,
            amplitude: 0.0,
            excess_sq: 0.0,
        }
    }

    pub fn is_landau(&self) -> bool {
        self.s_sign == 0
    }

    /// σ_st⁴ − σ_L⁴, computed without cancellation.
    pub fn width_excess_fourth(&self) -> f64 {
        self.excess_sq * (self.sigma_st * self.sigma_st + self.sigma_l * self.sigma_l)
    }

    /// Angular frequency of the breathing, 𝔰|ω_c|.
    ///
    /// The magnitude of ω_c is used so that σ′(0) reproduces σ₀′ for either
    /// field direction.
    pub fn breathing_frequency(&self) -> f64 {
        f64::from(self.s_sign) * self.omega_c.abs()
    }

    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega_c.abs()
    }

    /// Breathing phase 𝔰|ω_c|t − ϑ.
    pub fn phase(&self, t: f64) -> f64 {
        self.breathing_frequency() * t - self.theta_phase
    }

    pub fn sigma_sq(&self, t: f64) -> f64 {
        self.sigma_sq_derivative(t, 0)
    }

    /// k-th time derivative of σ²(t).
    pub fn sigma_sq_derivative(&self, t: f64, order: u32) -> f64 {
        let st_sq = self.sigma_st * self.sigma_st;
        if order == 0 {
            return st_sq * (1.0 + self.amplitude * self.phase(t).sin());
        }
        if self.s_sign == 0 {
            return 0.0;
        }
        let w = self.breathing_frequency();
        st_sq * self.amplitude * w.powi(order as i32) * sin_derivative(self.phase(t), order)
    }

    /// 1/𝓡(t) = σ′/(cσ) = ∂_t σ² / (2cσ²), 1/cm.
    pub fn inverse_curvature(&self, t: f64) -> f64 {
        self.sigma_sq_derivative(t, 1) / (2.0 * C_LIGHT * self.sigma_sq(t))
    }
}

/// k-th derivative of sin at `x`, divided by the chain-rule factor.
fn sin_derivative(x: f64, order: u32) -> f64 {
    match order % 4 {
        0 => x.sin(),
        1 => x.cos(),
        2 => -x.sin(),
        _ => -x.cos(),
    }
}

/// ∂_t^order ϱ²(t) for order in 0..=3, cm²/s^order.
pub fn rho_sq_and_derivatives(t: f64, q: QuantumNumbers, bp: &BreathingParams, order: u32) -> Result<f64> {
    if order > 3 {
        return Err(invalid("order", format!("must be in 0..=3, got {order}")));
    }
    Ok(q.degeneracy() * bp.sigma_sq_derivative(t, order))
}

/// ϱ² and its first three time derivatives as functions of the breathing
/// phase, in any precision.
pub fn rho_sq_all_at_phase<T: Real>(phase: T, q: QuantumNumbers, bp: &BreathingParams) -> [T; 4] {
    let scale = q.degeneracy() * bp.sigma_st * bp.sigma_st;
    let zero = T::from_f64(0.0);
    if bp.s_sign == 0 {
        return [T::from_f64(scale), zero, zero, zero];
    }
    let w = bp.breathing_frequency();
    let a = bp.amplitude;
    let (s, c) = (phase.sin(), phase.cos());
    [
        T::from_f64(scale) + T::from_f64(scale * a) * s,
        T::from_f64(scale * a * w) * c,
        -(T::from_f64(scale * a * w * w) * s),
        -(T::from_f64(scale * a * w * w * w) * c),
    ]
}

/// ϱ² and its first three time derivatives.
pub fn rho_sq_all(t: f64, q: QuantumNumbers, bp: &BreathingParams) -> [f64; 4] {
    let g = q.degeneracy();
    [0, 1, 2, 3].map(|k| g * bp.sigma_sq_derivative(t, k))
}
