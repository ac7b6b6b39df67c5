//! Charge and current densities of the packet, used by the oracles.
//!
//! ρ = e·P⊥(r⊥, t)·P∥(z, t) with
//! P⊥ = N⊥²/σ² · u^|l| (L_n^|l|(u))² e^{−u},  u = r⊥²/σ²(t).
//! The current is ρ times the local velocity field:
//! v = c r⊥/𝓡 ê_R⊥ + (ħ/m)(l/r⊥ − eH r⊥/(2cħ)) ê_φ + (p₀/m + z̃ ħ²t/(m²σ_z²w²)) ê_Z.

use crate::constants::{C_LIGHT, E_CHARGE, HBAR, M_ELECTRON};
use crate::state::PacketState;
use crate::vector::CylVec;

/// Generalized Laguerre polynomial L_n^α(x) by upward recurrence in n.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// N⊥² = n!/(π (n+|l|)!).
pub fn transverse_norm_sq(n: u32, abs_l: u32) -> f64 {
    let ratio: f64 = (n + 1..=n + abs_l).map(|k| 1.0 / f64::from(k)).product();
    ratio / std::f64::consts::PI
}

/// Local density and envelope pieces shared by ρ, j and ∂ρ/∂t.
struct Envelope {
    u: f64,
    sigma_sq: f64,
    laguerre: f64,
    /// P⊥ without the (L)² factor: N⊥²/σ² · u^|l| e^{−u}
    radial: f64,
    longitudinal: f64,
}

fn envelope(state: &PacketState, r_perp: f64, z: f64, t: f64) -> Envelope {
    let q = state.quantum;
    let abs_l = q.l.unsigned_abs();
    let sigma_sq = state.breathing.sigma_sq(t);
    let u = r_perp * r_perp / sigma_sq;
    let log_power = if abs_l == 0 {
        0.0
    } else if u > 0.0 {
        f64::from(abs_l) * u.ln()
    } else {
        f64::NEG_INFINITY
    };
    let radial = transverse_norm_sq(q.n, abs_l) / sigma_sq * (log_power - u).exp();
    Envelope {
        u,
        sigma_sq,
        laguerre: laguerre(q.n, f64::from(abs_l), u),
        radial,
        longitudinal: state.longitudinal.density(z, t),
    }
}

/// ρ(r, t) in statC/cm³. Independent of φ.
pub fn charge_density(state: &PacketState, r_perp: f64, _phi: f64, z: f64, t: f64) -> f64 {
    let env = envelope(state, r_perp, z, t);
    E_CHARGE * env.radial * env.laguerre * env.laguerre * env.longitudinal
}

/// j(r, t) in statC/(cm²·s), cylindrical components at the source point.
pub fn current_density(state: &PacketState, r_perp: f64, _phi: f64, z: f64, t: f64) -> CylVec {
    let env = envelope(state, r_perp, z, t);
    let rho = E_CHARGE * env.radial * env.laguerre * env.laguerre * env.longitudinal;
    if rho == 0.0 {
        return CylVec::ZERO;
    }
    let l = f64::from(state.quantum.l);
    let radial = rho * C_LIGHT * r_perp * state.breathing.inverse_curvature(t);
    let azimuthal = if r_perp > 0.0 {
        rho * (HBAR / M_ELECTRON) * (l / r_perp - E_CHARGE * state.field_gauss * r_perp / (2.0 * C_LIGHT * HBAR))
    } else {
        0.0
    };
    let pkt = &state.longitudinal;
    let z_rel = z - pkt.centroid(t);
    let spreading = z_rel * HBAR * HBAR * t / (M_ELECTRON * M_ELECTRON * pkt.sigma_z * pkt.sigma_z * pkt.width_sq(t));
    let longitudinal = rho * (pkt.p0 / M_ELECTRON + spreading);
    CylVec::new(radial, azimuthal, longitudinal)
}

/// ∂ρ/∂t evaluated analytically from ∂_tσ² and the longitudinal spreading.
pub fn charge_density_rate(state: &PacketState, r_perp: f64, _phi: f64, z: f64, t: f64) -> f64 {
    let env = envelope(state, r_perp, z, t);
    let q = state.quantum;
    let a = f64::from(q.l.unsigned_abs());
    let lag = env.laguerre;
    let lag_d = if q.n == 0 {
        0.0
    } else {
        -laguerre(q.n - 1, a + 1.0, env.u)
    };
    // F + uF' for F(u) = u^a L² e^{−u}, with the u^a e^{−u} factor kept in env.radial
    let f_plus = lag * ((1.0 + a - env.u) * lag + 2.0 * env.u * lag_d);
    let dsig_sq = state.breathing.sigma_sq_derivative(t, 1);
    let transverse_rate = -dsig_sq / env.sigma_sq * env.radial * f_plus;

    let pkt = &state.longitudinal;
    let w_sq = pkt.width_sq(t);
    let dw_sq = 2.0 * HBAR * HBAR * t / (M_ELECTRON * M_ELECTRON * pkt.sigma_z * pkt.sigma_z);
    let z_rel = z - pkt.centroid(t);
    let log_rate =
        2.0 * z_rel * pkt.p0 / (M_ELECTRON * w_sq) + z_rel * z_rel * dw_sq / (w_sq * w_sq) - dw_sq / (2.0 * w_sq);

    let rho_perp = env.radial * lag * lag;
    E_CHARGE * (transverse_rate * env.longitudinal + rho_perp * env.longitudinal * log_rate)
}
