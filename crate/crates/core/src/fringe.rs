//! Transition through the solenoid fringe field, modelled as an adiabatic
//! linear ramp of the cyclotron frequency over a transit time T = 2D/c.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::constants::{cyclotron_frequency, C_LIGHT, E_CHARGE, HBAR, M_ELECTRON};
use crate::dynamics::{BreathingParams, QuantumNumbers};
use crate::error::{invalid, Result};
use crate::state::LongitudinalPacket;

/// Default threshold on |ω_c′|/ω_c² below which the ramp counts as adiabatic.
pub const ADIABATIC_THRESHOLD: f64 = 0.1;
/// Smallest |ω_c T| the transit formulas are evaluated at.
pub const MIN_OMEGA_T: f64 = 1e-3;

const SERIES_LIMIT: f64 = 1.5;

/// Fresnel cosine integral C(x) = ∫₀ˣ cos(πt²/2) dt.
///
/// Power series below x = 1.5; above, the complementary error function
/// continued fraction (modified Lentz). Odd in x.
pub fn fresnel_c(x: f64) -> f64 {
    let ax = x.abs();
    let c = if ax < SERIES_LIMIT {
        fresnel_c_series(ax)
    } else {
        fresnel_c_continued_fraction(ax)
    };
    c.copysign(x)
}

fn fresnel_c_series(x: f64) -> f64 {
    // Σ (−1)^k (π/2)^{2k} x^{4k+1} / ((2k)! (4k+1))
    let arg = FRAC_PI_2 * x * x;
    let arg_sq = arg * arg;
    let mut term = x;
    let mut sum = x;
    for k in 1..60 {
        let kf = k as f64;
        term *= -arg_sq / ((2.0 * kf - 1.0) * (2.0 * kf));
        let contrib = term / (4.0 * kf + 1.0);
        sum += contrib;
        if contrib.abs() < f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}

fn fresnel_c_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let pix2 = PI * x * x;
    let mut b = Complex64::new(1.0, -pix2);
    let mut cc = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    let mut n = -1.0;
    for _ in 0..10_000 {
        n += 2.0;
        let a = -n * (n + 1.0);
        b += 4.0;
        d = (d * a + b).inv();
        cc = b + cc.inv() * a;
        let del = cc * d;
        h *= del;
        if (del.re - 1.0).abs() + del.im.abs() < f64::EPSILON {
            break;
        }
    }
    h *= Complex64::new(x, -x);
    let phase = Complex64::from_polar(1.0, 0.5 * pix2);
    let cs = Complex64::new(0.5, 0.5) * (Complex64::new(1.0, 0.0) - phase * h);
    cs.re
}

/// Fringe-region parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeScenario {
    /// cm
    pub diameter: f64,
    /// s
    pub transit_time: f64,
    /// Signed inner-field cyclotron frequency, rad/s.
    pub omega_c: f64,
    /// rad/s²
    pub omega_c_rate: f64,
}

impl FringeScenario {
    /// Transit over 2D at the speed of light with ω_c′ = ω_c/T.
    pub fn from_solenoid(diameter: f64, field_gauss: f64) -> Result<Self> {
        if !(diameter > 0.0 && diameter.is_finite()) {
            return Err(invalid("diameter", format!("must be positive, got {diameter}")));
        }
        let transit_time = 2.0 * diameter / C_LIGHT;
        let omega_c = cyclotron_frequency(field_gauss);
        Ok(Self {
            diameter,
            transit_time,
            omega_c,
            omega_c_rate: omega_c / transit_time,
        })
    }

    pub fn omega_t(&self) -> f64 {
        self.omega_c * self.transit_time
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdiabaticCheck {
    /// |ω_c′| / ω_c²
    pub ratio: f64,
    pub adiabatic: bool,
}

pub fn adiabatic_check(fs: &FringeScenario) -> AdiabaticCheck {
    adiabatic_check_with(fs, ADIABATIC_THRESHOLD)
}

pub fn adiabatic_check_with(fs: &FringeScenario, threshold: f64) -> AdiabaticCheck {
    let ratio = if fs.omega_c_rate == 0.0 {
        0.0
    } else {
        fs.omega_c_rate.abs() / (fs.omega_c * fs.omega_c)
    };
    AdiabaticCheck {
        ratio,
        adiabatic: ratio < threshold,
    }
}

/// Transit-averaged power and angular-momentum rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitObservables {
    /// ⟨P⟩_T, erg/s
    pub power: f64,
    /// ⟨dL_z/dt⟩_{int,T}, erg
    pub dlz_interference: f64,
    /// ⟨dL_{p₀,z}/dt⟩_{int,T}, erg
    pub dlz_p0: f64,
    /// ⟨dL_z/dt⟩_{rad,T}, erg; R-dependent transition term
    pub dlz_radiative: f64,
    /// Shared bracket (4/5)(ωT)² + 1 + … of the power and interference terms.
    pub bracket: f64,
    pub fresnel_argument: f64,
    pub fresnel_value: f64,
    /// Observation radius the radiative term was evaluated at, cm.
    pub radius: f64,
}

/// The bracketed trigonometric factor shared by ⟨P⟩_T and ⟨dL/dt⟩_{int,T}.
///
/// The square-root and Fresnel pieces take |ω_c T|; the remaining terms are
/// even in ω_c T.
pub fn transit_bracket(omega_t: f64, s_sign: i8) -> (f64, f64, f64) {
    let w = omega_t.abs();
    let arg = 2.0 * (w / PI).sqrt();
    let fres = fresnel_c(arg);
    let s = f64::from(s_sign);
    let value =
        0.8 * omega_t * omega_t + 1.0 + (9.0 / 16.0) * (PI / w).sqrt() * fres + (s - 3.0) / 8.0 * (2.0 * omega_t).cos()
            - 0.5 * omega_t * (2.0 * omega_t).sin();
    (value, arg, fres)
}

pub fn transit_observables(
    fs: &FringeScenario,
    q: QuantumNumbers,
    bp: &BreathingParams,
    pkt: &LongitudinalPacket,
    radius: f64,
) -> Result<TransitObservables> {
    let t = fs.transit_time;
    if !(t > 0.0 && t.is_finite()) {
        return Err(invalid("transit_time", format!("must be positive, got {t}")));
    }
    let wt = fs.omega_t();
    if wt.abs().is_nan() || wt.abs() < MIN_OMEGA_T {
        return Err(invalid(
            "omega_c*T",
            format!(
                "|ω_c T| = {:e} is below {MIN_OMEGA_T:e}; the Fresnel term diverges at 0",
                wt.abs()
            ),
        ));
    }
    let w = fs.omega_c;
    let g = q.degeneracy();
    let s = f64::from(bp.s_sign);
    let e2 = E_CHARGE * E_CHARGE;
    let c = C_LIGHT;
    let fourth = bp.width_excess_fourth();
    let root = fourth.sqrt();
    let (bracket, arg, fres) = transit_bracket(wt, bp.s_sign);

    let power = g * g * w * w * e2 / (12.0 * t * t * c.powi(5)) * fourth * bracket;

    let spread = HBAR * HBAR / (5.0 * pkt.sigma_z * pkt.sigma_z * M_ELECTRON * M_ELECTRON * c * c);
    let dlz_interference = w * e2 / (4.0 * c.powi(3))
        * (g * (2.0 * s * w / (3.0 * t)) * root * (spread - 2.0) * wt.cos()
            + g * g * w * w / (15.0 * t * t * c * c) * fourth * bracket);

    let dlz_p0 =
        g * s * PI * w * w * e2 * pkt.p0 * pkt.p0 / (64.0 * t * M_ELECTRON * M_ELECTRON * c.powi(4)) * root * wt.cos();

    let sin_wt = wt.sin();
    let dlz_radiative = g * g * 5.0 * PI * w.powi(3) * e2 * radius / (256.0 * t.powi(3) * c.powi(6))
        * fourth
        * (wt * (2.0 * wt).sin() + (1.0 - 2.0 * wt * wt) * sin_wt * sin_wt);

    Ok(TransitObservables {
        power,
        dlz_interference,
        dlz_p0,
        dlz_radiative,
        bracket,
        fresnel_argument: arg,
        fresnel_value: fres,
        radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::InitialTransverseState;
    use approx::assert_relative_eq;

    #[test]
    fn fresnel_reference_points() {
        assert_eq!(fresnel_c(0.0), 0.0);
        assert_relative_eq!(fresnel_c(1.0), 0.779_893_400_376_822_8, max_relative = 1e-14);
        assert!((fresnel_c(50.0) - 0.5).abs() < 1e-2);
        assert_relative_eq!(fresnel_c(-1.0), -fresnel_c(1.0));
        // continuity across the method switch
        let below = fresnel_c(SERIES_LIMIT - 1e-12);
        let above = fresnel_c(SERIES_LIMIT + 1e-12);
        assert!((below - above).abs() < 1e-11);
    }

    #[test]
    fn appendix_geometry_is_adiabatic() {
        let fs = FringeScenario::from_solenoid(1.0, 1.0e4).unwrap();
        assert!((fs.transit_time * 1e12 - 66.7).abs() < 0.1);
        let check = adiabatic_check(&fs);
        assert_relative_eq!(check.ratio, 1.0 / fs.omega_t().abs(), max_relative = 1e-12);
        assert!(check.adiabatic);
    }

    #[test]
    fn adiabatic_boundary_is_strict() {
        let mut fs = FringeScenario::from_solenoid(1.0, 1.0e4).unwrap();
        fs.omega_c_rate = 0.0;
        assert_eq!(adiabatic_check(&fs).ratio, 0.0);
        assert!(adiabatic_check(&fs).adiabatic);
        fs.omega_c = 2.0;
        fs.omega_c_rate = 0.4;
        let check = adiabatic_check(&fs);
        assert_eq!(check.ratio, 0.1);
        assert!(!check.adiabatic);
    }

    #[test]
    fn tiny_omega_t_is_rejected() {
        let mut fs = FringeScenario::from_solenoid(1.0, 1.0e4).unwrap();
        fs.transit_time = 1e-20;
        let bp = BreathingParams::new(InitialTransverseState::new(1e-4, 0.0).unwrap(), 1e4).unwrap();
        let pkt = LongitudinalPacket::new(0.0, 1e-5).unwrap();
        assert!(transit_observables(&fs, QuantumNumbers::new(0, 1), &bp, &pkt, 1.0).is_err());
    }
}
