//! Far-zone-expanded potentials, fields, Poynting vector and angular-momentum
//! flux of the breathing packet.
//!
//! Every function takes ∂_t^k ϱ² at the retarded time τ = t − R/c. Each
//! expression is a term-by-term transcription of the closed forms, grouped by
//! its order in 1/R at fixed direction and τ. The near (R⁻⁴) Poynting term is
//! not represented: it carries neither energy nor angular momentum to infinity.

use std::f64::consts::PI;

use crate::constants::{C_LIGHT, E_CHARGE, HBAR, LAMBDA_C, M_ELECTRON};
use crate::error::{invalid, Result};
use crate::real::Real;
use crate::state::PacketState;
use crate::vector::{CylVec, OrderSplit};

/// Observation point, origin at the solenoid midpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservationPoint {
    /// cm
    pub radius: f64,
    /// polar angle from +z
    pub theta: f64,
    pub phi: f64,
}

impl ObservationPoint {
    pub fn new(radius: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(invalid("radius", format!("must be positive and finite, got {radius}")));
        }
        Ok(Self { radius, theta, phi })
    }

    pub fn r_perp(&self) -> f64 {
        self.radius * self.theta.sin()
    }

    pub fn z(&self) -> f64 {
        self.radius * self.theta.cos()
    }

    /// R as a cylindrical vector (R⊥, 0, Z).
    pub fn position(&self) -> CylVec {
        CylVec::new(self.r_perp(), 0.0, self.z())
    }

    pub fn retarded_time(&self, t: f64) -> f64 {
        t - self.radius / C_LIGHT
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Potentials {
    /// statV
    pub scalar: f64,
    pub vector: OrderSplit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmFieldSample {
    /// statV/cm, far (1/R) and near (1/R²) parts
    pub electric: OrderSplit,
    /// gauss
    pub magnetic: OrderSplit,
}

impl EmFieldSample {
    pub fn electric_total(&self) -> CylVec {
        self.electric.total()
    }

    pub fn magnetic_total(&self) -> CylVec {
        self.magnetic.total()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoyntingDecomposition {
    /// erg/(cm²·s), ∝ R⁻²
    pub far: CylVec,
    /// erg/(cm²·s), ∝ R⁻³
    pub interference: CylVec,
    pub retarded_time: f64,
}

/// Shared geometric and packet quantities at one observation event.
struct Event {
    r: f64,
    rp: f64,
    z: f64,
    /// [ϱ², ∂ϱ², ∂²ϱ², ∂³ϱ²] at τ
    d: [f64; 4],
    omega_c: f64,
    h: f64,
    p0: f64,
    sigma_z: f64,
}

impl Event {
    fn new(obs: &ObservationPoint, t: f64, state: &PacketState) -> Self {
        let tau = obs.retarded_time(t);
        Self {
            r: obs.radius,
            rp: obs.r_perp(),
            z: obs.z(),
            d: state.rho_sq_derivs(tau),
            omega_c: state.omega_c(),
            h: state.field_gauss,
            p0: state.longitudinal.p0,
            sigma_z: state.longitudinal.sigma_z,
        }
    }
}

const E: f64 = E_CHARGE;
const M: f64 = M_ELECTRON;
const C: f64 = C_LIGHT;

/// Scalar and vector potentials of the expanded retarded integrals.
///
/// The z-component keeps its explicit dependence on `t` (the drift of the
/// packet centroid); everything else depends on time only through τ.
pub fn potentials(obs: &ObservationPoint, t: f64, state: &PacketState) -> Potentials {
    let ev = Event::new(obs, t, state);
    let Event {
        r,
        rp,
        z,
        d,
        h,
        p0,
        sigma_z,
        ..
    } = ev;
    let l = f64::from(state.quantum.l);

    let scalar = E / r * (1.0 + z * p0 * t / (r * r * M));

    let pre = E * HBAR / (2.0 * r * r * M * C * C);
    let ar_coef = pre * rp / (2.0 * LAMBDA_C * C);
    let aphi_field = -E * h / (2.0 * HBAR * C);
    let x = HBAR * HBAR / (2.0 * sigma_z * sigma_z) + p0 * p0;

    let leading = CylVec::new(
        ar_coef * d[2],
        pre * rp * aphi_field * d[1],
        pre * (2.0 / HBAR) * r * p0 * C,
    );
    let subleading = CylVec::new(
        ar_coef * (C / r) * d[1],
        pre * rp * (l * C / r + aphi_field * C * d[0] / r),
        pre * (2.0 / HBAR) * (z * C * t / (r * M)) * x,
    );
    Potentials {
        scalar,
        vector: OrderSplit { leading, subleading },
    }
}

/// Electric and magnetic fields, split by order in 1/R.
pub fn em_fields(obs: &ObservationPoint, t: f64, state: &PacketState) -> EmFieldSample {
    let ev = Event::new(obs, t, state);
    let Event {
        r,
        rp,
        z,
        d,
        h,
        p0,
        sigma_z,
        ..
    } = ev;
    let x = HBAR * HBAR / (2.0 * sigma_z * sigma_z) + p0 * p0;
    let c4 = C * C * C * C;

    // E
    let er_pref = E * rp / (r * r);
    let er_breath = HBAR / (4.0 * LAMBDA_C * M * c4);
    let ephi_pref = E * E * h * rp / (4.0 * r * r * M * c4);
    let e_far = CylVec::new(-er_pref * er_breath * d[3], ephi_pref * d[2], 0.0);
    let e_near = CylVec::new(
        er_pref * ((1.0 / r) * (1.0 + 3.0 * z * p0 / (r * M * C)) - er_breath * (C / r) * d[2]),
        ephi_pref * (C / r) * d[1],
        E / (r * r * r) * (z * (1.0 - x / (M * M * C * C)) + (2.0 * z * z - rp * rp) * p0 / (r * M * C)),
    );

    // H
    let hr_pref = -E * E * h * rp * z / (4.0 * r * r * r * M * c4);
    let hphi_pref = E * HBAR * rp / (2.0 * r * r * r * M * c4);
    let hz_pref = E * E * h / (4.0 * r * r * M * C * C * C);
    let h_far = CylVec::new(
        hr_pref * d[2],
        hphi_pref * (-z / (2.0 * LAMBDA_C)) * d[3],
        hz_pref * (rp * rp / (r * C)) * d[2],
    );
    let h_near = CylVec::new(
        hr_pref * (3.0 * C / r) * d[1],
        hphi_pref
            * (-z / (2.0 * LAMBDA_C) * (3.0 * C / r) * d[2]
                + 3.0 * HBAR * z * C * C / (r * M * sigma_z * sigma_z)
                + (2.0 * p0 * C * C * C / HBAR) * (1.0 + 2.0 * z * p0 / (r * M * C))),
        hz_pref * (3.0 * rp * rp / (r * r) * d[1] - 2.0 * d[1]),
    );

    EmFieldSample {
        electric: OrderSplit {
            leading: e_far,
            subleading: e_near,
        },
        magnetic: OrderSplit {
            leading: h_far,
            subleading: h_near,
        },
    }
}

/// Far (R⁻²) and interference (R⁻³) parts of the Poynting vector.
pub fn poynting(obs: &ObservationPoint, t: f64, state: &PacketState) -> PoyntingDecomposition {
    let tau = obs.retarded_time(t);
    let (far, int) = poynting_terms(obs, state.rho_sq_derivs(tau), state);
    PoyntingDecomposition {
        far: CylVec::new(far[0], far[1], far[2]),
        interference: CylVec::new(int[0], int[1], int[2]),
        retarded_time: tau,
    }
}

/// Cylindrical (r⊥, φ, z) components of the far and interference Poynting
/// terms, given ∂_t^k ϱ² at the retarded time, in any precision.
///
/// Every term is a geometric coefficient times a product of the ϱ²
/// derivatives; the coefficients are formed in f64 and only the products
/// carry the extended precision.
pub fn poynting_terms<T: Real>(obs: &ObservationPoint, d: [T; 4], state: &PacketState) -> ([T; 3], [T; 3]) {
    let (r, rp, z) = (obs.radius, obs.r_perp(), obs.z());
    let w = state.omega_c();
    let h = state.field_gauss;
    let p0 = state.longitudinal.p0;
    let sigma_z = state.longitudinal.sigma_z;
    let k = T::from_f64;
    let (d1, d2, d3) = (d[1], d[2], d[3]);
    let c2 = C * C;
    let mc = M * C;
    let m2c2 = mc * mc;

    let far_pref = E * E * rp * rp / (64.0 * PI * r.powi(5) * C.powi(5));
    let far = [
        k(far_pref * w * w * rp) * d2 * d2,
        k(far_pref * w * rp) * d3 * d2,
        k(far_pref * z) * (d3 * d3 + k(w * w) * d2 * d2),
    ];

    let int_pref = E * E * rp / (16.0 * PI * r.powi(4) * c2);
    let hbar_p0 = HBAR * p0 / (LAMBDA_C * m2c2);
    let sz2 = sigma_z * sigma_z;
    let sigma_p = HBAR / sigma_z;
    let (rp2, z2, r2) = (rp * rp, z * z, r * r);

    let r_breath = w * w / (2.0 * c2) * (2.0 * rp2 / r2 - 1.0);
    let r_axial = z / r2 * (z - HBAR * HBAR * z / (2.0 * sz2 * m2c2) - hbar_p0 * ((rp2 - 2.0 * z2) / r + z * p0 / mc));
    let int_r = k(int_pref * r_breath) * d2 * d1 + k(int_pref * r_axial) * d3;

    let field_ratio = E * h * z * p0 / (r * m2c2 * w);
    let phi_31 = w / (4.0 * c2) * (3.0 * rp2 / r2 - 2.0);
    let phi_2 = w * (1.0 - HBAR * HBAR * z2 / (2.0 * sz2 * r2 * m2c2) + field_ratio * (2.0 - z * p0 / (r * mc)));
    let phi_22 = w * rp2 / (4.0 * r2 * c2);
    let int_phi = k(int_pref * phi_31) * d3 * d1 - k(int_pref * phi_2) * d2 + k(int_pref * phi_22) * d2 * d2;

    let zr = int_pref * rp / r;
    let z_32 = z / (r * c2);
    let z_3 = 3.0 * z * sigma_p * sigma_p / (2.0 * r * m2c2)
        - z / r
        - hbar_p0 * (1.0 + 2.0 * z * p0 / (r * mc) + 3.0 * z2 / r2);
    let z_21 = w * w * z / (r * c2);
    let int_z = k(zr * z_32) * d3 * d2 + k(zr * z_3) * d3 + k(zr * z_21) * d2 * d1;

    (far, [int_r, int_phi, int_z])
}

/// Angular-momentum flux density f = (1/c) R × S.
pub fn oam_flux_from_poynting(obs: &ObservationPoint, s: CylVec) -> CylVec {
    obs.position().cross(s) * (1.0 / C)
}

/// Far-field angular-momentum flux density, transcribed from the closed form.
pub fn oam_flux_far(obs: &ObservationPoint, t: f64, state: &PacketState) -> CylVec {
    let ev = Event::new(obs, t, state);
    let Event {
        r,
        rp,
        z,
        d,
        omega_c: w,
        ..
    } = ev;
    let (d2, d3) = (d[2], d[3]);
    let pref = E * E * rp * rp / (64.0 * PI * r.powi(5) * C.powi(6));
    CylVec::new(-w * rp * z * d3 * d2, -rp * z * d3 * d3, w * rp * rp * d3 * d2) * pref
}

/// Sphere-integrated far-field dL_z/dt at radius R, erg. Grows linearly in R.
pub fn dlz_dt_far(radius: f64, t: f64, state: &PacketState) -> f64 {
    let d = state.rho_sq_derivs(t - radius / C);
    E * E * radius * state.omega_c() / (30.0 * C.powi(6)) * d[3] * d[2]
}
