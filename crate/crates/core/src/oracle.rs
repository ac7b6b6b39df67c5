//! Brute-force verification of the closed forms.
//!
//! Sphere integrals use Gauss–Legendre nodes in cos θ and a uniform
//! trapezoid in φ; period averages use uniform samples of one or more
//! cyclotron periods. The integrands are low-degree trigonometric
//! polynomials, so both rules are exact up to rounding. Parallel sums are
//! reduced in a fixed pairwise order so results do not depend on the number
//! of threads.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::constants::{C_LIGHT, E_CHARGE};
use crate::error::{invalid, Error, Result};
use twofloat::TwoFloat;

use crate::dynamics::rho_sq_all_at_phase;
use crate::fields::{poynting_terms, ObservationPoint};
use crate::observables::ANGULAR_SHAPE_INTEGRAL;
use crate::real::Real;
use crate::sources::{charge_density, charge_density_rate, current_density};
use crate::state::PacketState;

/// Relative change allowed when all node counts are doubled.
pub const CONVERGENCE_RTOL: f64 = 1e-10;
/// Largest allowed |⟨S_int⟩ flux| / |⟨S_far⟩ flux| on the integration sphere.
pub const INTERFERENCE_FLUX_LIMIT: f64 = 1e-6;

/// Gauss–Legendre nodes and weights on [−1, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n > 0, "need at least one node");
    let mut out = vec![(0.0, 0.0); n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out[i] = (-x, w);
        out[n - 1 - i] = (x, w);
    }
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

pub use crate::real::pairwise_sum;

/// Composite Gauss–Legendre rule on [a, b].
pub fn composite_gauss_legendre(a: f64, b: f64, panels: usize, order: usize) -> Vec<(f64, f64)> {
    let base = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    (0..panels)
        .flat_map(|p| {
            let lo = a + h * p as f64;
            base.iter().map(move |&(x, w)| (lo + 0.5 * h * (x + 1.0), 0.5 * h * w))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereQuadrature {
    pub n_theta: usize,
    pub n_phi: usize,
    /// cm
    pub radius: f64,
}

impl SphereQuadrature {
    pub fn new(n_theta: usize, n_phi: usize, radius: f64) -> Result<Self> {
        if n_theta < 16 {
            return Err(invalid("n_theta", format!("must be at least 16, got {n_theta}")));
        }
        if n_phi == 0 {
            return Err(invalid("n_phi", "must be positive"));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(invalid("radius", format!("must be positive, got {radius}")));
        }
        Ok(Self { n_theta, n_phi, radius })
    }

    /// (θ, φ, weight) with weights summing to 4πR².
    pub fn nodes(&self) -> Vec<(f64, f64, f64)> {
        let r2 = self.radius * self.radius;
        let dphi = 2.0 * PI / self.n_phi as f64;
        gauss_legendre(self.n_theta)
            .into_iter()
            .flat_map(|(x, w)| {
                let theta = x.clamp(-1.0, 1.0).acos();
                (0..self.n_phi).map(move |j| (theta, dphi * j as f64, w * dphi * r2))
            })
            .collect()
    }

    fn doubled(&self) -> Self {
        Self {
            n_theta: 2 * self.n_theta,
            n_phi: 2 * self.n_phi,
            radius: self.radius,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeAverage {
    pub samples_per_period: usize,
    pub periods: usize,
}

impl TimeAverage {
    pub fn new(samples_per_period: usize, periods: usize) -> Result<Self> {
        if samples_per_period < 64 {
            return Err(invalid(
                "samples_per_period",
                format!("must be at least 64, got {samples_per_period}"),
            ));
        }
        if periods == 0 {
            return Err(invalid("periods", "must be positive"));
        }
        Ok(Self {
            samples_per_period,
            periods,
        })
    }

    fn doubled(&self) -> Self {
        Self {
            samples_per_period: 2 * self.samples_per_period,
            periods: self.periods,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub sphere: SphereQuadrature,
    pub time: TimeAverage,
}

impl OracleConfig {
    /// 64 Gauss–Legendre nodes, 8 azimuths, 512 samples, R = 10⁸ σ_st.
    pub fn default_for(state: &PacketState) -> Self {
        Self {
            sphere: SphereQuadrature {
                n_theta: 64,
                n_phi: 8,
                radius: 1.0e8 * state.breathing.sigma_st,
            },
            time: TimeAverage {
                samples_per_period: 512,
                periods: 1,
            },
        }
    }

    fn doubled(&self) -> Self {
        Self {
            sphere: self.sphere.doubled(),
            time: self.time.doubled(),
        }
    }
}

/// Period averages accumulated over one sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePass {
    pub far_flux: f64,
    pub interference_flux: f64,
    /// Cartesian ∮ f dA from the interference Poynting term, period-averaged.
    pub oam_interference: [f64; 3],
    /// Cartesian ∮ f dA from the far term, period-averaged.
    pub oam_far: [f64; 3],
    /// Sphere-integrated far dL_z/dt at each time sample.
    far_dlz_series: Vec<f64>,
}

pub fn sphere_pass(state: &PacketState, cfg: &OracleConfig) -> SpherePass {
    type Dd = TwoFloat;
    let radius = cfg.sphere.radius;
    let rings: Vec<(ObservationPoint, f64)> = gauss_legendre(cfg.sphere.n_theta)
        .into_iter()
        .map(|(x, w)| {
            let theta = x.clamp(-1.0, 1.0).acos();
            (
                ObservationPoint {
                    radius,
                    theta,
                    phi: 0.0,
                },
                w,
            )
        })
        .collect();
    let dphi = 2.0 * PI / cfg.sphere.n_phi as f64;
    let trig: Vec<(f64, f64)> = (0..cfg.sphere.n_phi).map(|j| (dphi * j as f64).sin_cos()).collect();
    let sum_sin = pairwise_sum(&trig.iter().map(|t| t.0).collect::<Vec<_>>());
    let sum_cos = pairwise_sum(&trig.iter().map(|t| t.1).collect::<Vec<_>>());
    let n_phi = cfg.sphere.n_phi as f64;
    let area = dphi * radius * radius;
    let per = cfg.time.samples_per_period;
    let total = per * cfg.time.periods;
    let s_sign = Dd::from(f64::from(state.breathing.s_sign));
    let theta0 = Dd::from(state.breathing.theta_phase);
    let inv_c = 1.0 / C_LIGHT;

    // One row per time sample: [far flux, int flux, f_int xyz, f_far xyz].
    // Samples are placed uniformly in breathing phase, computed in
    // double-double, so the zero-mean oscillating parts of the integrand
    // cancel far below f64 rounding. The cylindrical components do not
    // depend on φ, so each ring is evaluated once.
    let rows: Vec<[Dd; 8]> = (0..total)
        .into_par_iter()
        .map(|j| {
            let advance = twofloat::consts::TAU * Dd::from(j as f64) / Dd::from(per as f64);
            let d = rho_sq_all_at_phase(s_sign * advance - theta0, state.quantum, &state.breathing);
            let mut cols: [Vec<Dd>; 8] = Default::default();
            for (obs, w) in &rings {
                let (far, int) = poynting_terms(obs, d, state);
                let (st, ct) = obs.theta.sin_cos();
                let (rp, z) = (obs.r_perp(), obs.z());
                // f = R × S / c with R = (r⊥, 0, z)
                let flux = |v: [Dd; 3]| [-(v[1] * z * inv_c), (v[0] * z - v[2] * rp) * inv_c, v[1] * rp * inv_c];
                let (fi, ff) = (flux(int), flux(far));
                let wr = Dd::from(w * area);
                // φ trapezoid applied by linearity: Σ_j (a cos φ_j − b sin φ_j) = a Σcos − b Σsin
                let vals = [
                    (far[0] * st + far[2] * ct) * n_phi,
                    (int[0] * st + int[2] * ct) * n_phi,
                    fi[0] * sum_cos - fi[1] * sum_sin,
                    fi[0] * sum_sin + fi[1] * sum_cos,
                    fi[2] * n_phi,
                    ff[0] * sum_cos - ff[1] * sum_sin,
                    ff[0] * sum_sin + ff[1] * sum_cos,
                    ff[2] * n_phi,
                ];
                for (col, v) in cols.iter_mut().zip(vals) {
                    col.push(v * wr);
                }
            }
            cols.map(|c| pairwise_sum(&c))
        })
        .collect();

    let inv_n = Dd::from(1.0) / Dd::from(total as f64);
    let column = |k: usize| (pairwise_sum(&rows.iter().map(|r| r[k]).collect::<Vec<_>>()) * inv_n).to_f64();
    SpherePass {
        far_flux: column(0),
        interference_flux: column(1),
        oam_interference: [column(2), column(3), column(4)],
        oam_far: [column(5), column(6), column(7)],
        far_dlz_series: rows.iter().map(|r| r[7].to_f64()).collect(),
    }
}

fn relative_change(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Which closed-form normalization the direct integral reproduces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerNormalization {
    /// The closed-form ⟨P⟩.
    ClosedForm,
    /// The solid-angle integral of the quoted angular distribution, 16π/5 ⟨P⟩.
    AngularIntegral,
    Neither,
}

impl PowerNormalization {
    pub fn label(&self) -> &'static str {
        match self {
            Self::ClosedForm => "closed-form-power",
            Self::AngularIntegral => "angular-distribution-integral",
            Self::Neither => "neither",
        }
    }
}

/// Compares an oracle power with both candidate closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizationVerdict {
    pub oracle: f64,
    pub closed_form: f64,
    pub angular_integral: f64,
    pub rel_err_closed_form: f64,
    pub rel_err_angular_integral: f64,
    pub matches: PowerNormalization,
}

pub fn adjudicate_normalization(oracle: f64, closed_form: f64, tolerance: f64) -> NormalizationVerdict {
    let angular_integral = closed_form * ANGULAR_SHAPE_INTEGRAL;
    let rel_err_closed_form = relative_change(oracle, closed_form);
    let rel_err_angular_integral = relative_change(oracle, angular_integral);
    let matches = if rel_err_closed_form <= tolerance {
        PowerNormalization::ClosedForm
    } else if rel_err_angular_integral <= tolerance {
        PowerNormalization::AngularIntegral
    } else {
        PowerNormalization::Neither
    };
    NormalizationVerdict {
        oracle,
        closed_form,
        angular_integral,
        rel_err_closed_form,
        rel_err_angular_integral,
        matches,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOracle {
    /// erg/s
    pub value: f64,
    /// Relative change when every node count is doubled.
    pub convergence: f64,
    /// |⟨S_int⟩ flux| / |⟨S_far⟩ flux|.
    pub interference_to_far: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OamOracle {
    /// Period-averaged ∮ f_int dA, Cartesian, erg.
    pub interference: [f64; 3],
    /// Period-averaged ∮ f_far dA, Cartesian, erg.
    pub far_average: [f64; 3],
    /// max_t |∮ f_far,z dA|.
    pub far_amplitude: f64,
    pub convergence: f64,
}

/// Full oracle run: power and OAM from one pass at base and doubled resolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub power: PowerOracle,
    pub oam: OamOracle,
}

pub fn run_oracle(state: &PacketState, cfg: &OracleConfig) -> Result<OracleResult> {
    let base = sphere_pass(state, cfg);
    let fine = sphere_pass(state, &cfg.doubled());

    let interference_to_far = if base.far_flux == 0.0 {
        0.0
    } else {
        (base.interference_flux / base.far_flux).abs()
    };
    if interference_to_far > INTERFERENCE_FLUX_LIMIT {
        return Err(Error::SphereTooSmall {
            ratio: interference_to_far,
            limit: INTERFERENCE_FLUX_LIMIT,
        });
    }
    let power_conv = relative_change(base.far_flux, fine.far_flux);
    let oam_conv = relative_change(base.oam_interference[2], fine.oam_interference[2]);
    let achieved = power_conv.max(oam_conv);
    if achieved > CONVERGENCE_RTOL {
        return Err(Error::NonConvergence {
            achieved,
            tolerance: CONVERGENCE_RTOL,
        });
    }
    let far_amplitude = base.far_dlz_series.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(OracleResult {
        power: PowerOracle {
            value: base.far_flux,
            convergence: power_conv,
            interference_to_far,
        },
        oam: OamOracle {
            interference: base.oam_interference,
            far_average: base.oam_far,
            far_amplitude,
            convergence: oam_conv,
        },
    })
}

/// Period-averaged radiated power from the far Poynting flux, erg/s.
pub fn numeric_avg_power(state: &PacketState, cfg: &OracleConfig) -> Result<PowerOracle> {
    run_oracle(state, cfg).map(|r| r.power)
}

/// Period-averaged angular-momentum rate from the interference term, plus
/// the far-term average, erg.
pub fn numeric_avg_oam_rate(state: &PacketState, cfg: &OracleConfig) -> Result<OamOracle> {
    run_oracle(state, cfg).map(|r| r.oam)
}

/// Least-squares slope of ln|f(R)| against ln R.
pub fn scaling_slope(f: impl Fn(f64) -> f64, radii: &[f64]) -> Result<f64> {
    if radii.len() < 5 {
        return Err(invalid("radii", format!("need at least 5 radii, got {}", radii.len())));
    }
    let values: Vec<f64> = radii.iter().map(|&r| f(r)).collect();
    if values.iter().all(|v| *v == 0.0) {
        return Err(Error::IdenticallyZero);
    }
    if let Some(i) = values.iter().position(|v| *v == 0.0 || !v.is_finite()) {
        return Err(Error::ZeroSample { radius: radii[i] });
    }
    let xs: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let ys: Vec<f64> = values.iter().map(|v| v.abs().ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// `count` logarithmically spaced radii in [lo, hi].
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

/// Central difference of order 1..=3 with one level of Richardson extrapolation.
pub fn finite_difference(f: impl Fn(f64) -> f64, t: f64, order: u32, step: f64) -> Result<f64> {
    if step.is_nan() || step <= 0.0 {
        return Err(invalid("step", format!("must be positive, got {step}")));
    }
    let stencil = |h: f64| -> f64 {
        match order {
            1 => (f(t + h) - f(t - h)) / (2.0 * h),
            2 => (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h),
            _ => (f(t + 2.0 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2.0 * h)) / (2.0 * h * h * h),
        }
    };
    if !(1..=3).contains(&order) {
        return Err(invalid("order", format!("must be in 1..=3, got {order}")));
    }
    let coarse = stencil(step);
    let fine = stencil(0.5 * step);
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Continuity-equation residual on a Cartesian grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuityResidual {
    pub max_residual: f64,
    pub max_rate: f64,
    /// max|∂ρ/∂t + ∇·j| / max|∂ρ/∂t|
    pub relative: f64,
}

/// Evaluates ∂ρ/∂t (analytic) + ∇·j (Richardson central differences) on an
/// `n³` cell-centred grid covering the packet at time t.
pub fn continuity_residual(state: &PacketState, t: f64, n: usize) -> ContinuityResidual {
    let sigma = state.breathing.sigma_sq(t).sqrt();
    let half_xy = sigma * (3.0 * state.degeneracy() + 20.0).sqrt();
    let pkt = &state.longitudinal;
    let w = pkt.width_sq(t).sqrt();
    let zc = pkt.centroid(t);
    let half_z = 4.0 * w;
    let hx = 1e-3 * sigma;
    let hz = 1e-3 * w;

    let coord = |i: usize, half: f64| -half + (i as f64 + 0.5) * 2.0 * half / n as f64;
    let cart_current = |x: f64, y: f64, z: f64| -> [f64; 3] {
        let r = x.hypot(y);
        let phi = y.atan2(x);
        current_density(state, r, phi, z, t).to_cartesian(phi)
    };
    let derivative = |g: &dyn Fn(f64) -> f64, h: f64| -> f64 {
        let d1 = (g(h) - g(-h)) / (2.0 * h);
        let d2 = (g(0.5 * h) - g(-0.5 * h)) / h;
        (4.0 * d2 - d1) / 3.0
    };

    let planes: Vec<(f64, f64)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let x = coord(i, half_xy);
            let mut max_res = 0.0f64;
            let mut max_rate = 0.0f64;
            for j in 0..n {
                let y = coord(j, half_xy);
                for k in 0..n {
                    let z = zc + coord(k, half_z);
                    let r = x.hypot(y);
                    let rate = charge_density_rate(state, r, y.atan2(x), z, t);
                    let div = derivative(&|d| cart_current(x + d, y, z)[0], hx)
                        + derivative(&|d| cart_current(x, y + d, z)[1], hx)
                        + derivative(&|d| cart_current(x, y, z + d)[2], hz);
                    max_res = max_res.max((rate + div).abs());
                    max_rate = max_rate.max(rate.abs());
                }
            }
            (max_res, max_rate)
        })
        .collect();
    let max_residual = planes.iter().fold(0.0f64, |m, p| m.max(p.0));
    let max_rate = planes.iter().fold(0.0f64, |m, p| m.max(p.1));
    ContinuityResidual {
        max_residual,
        max_rate,
        relative: if max_rate == 0.0 { 0.0 } else { max_residual / max_rate },
    }
}

/// Spatial moments of the source densities by product quadrature in (r⊥, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMoments {
    /// ∫ρ d³r, statC
    pub charge: f64,
    /// ∫ r⊥² ρ/e d³r, cm²
    pub r_perp_sq: f64,
    /// ∫ 2 r⊥ j_R⊥/e d³r = d⟨r⊥²⟩/dt, cm²/s
    pub r_perp_sq_rate: f64,
}

pub fn density_moments(state: &PacketState, t: f64) -> DensityMoments {
    let sigma = state.breathing.sigma_sq(t).sqrt();
    let r_max = sigma * (4.0 * state.degeneracy() + 80.0).sqrt();
    let pkt = &state.longitudinal;
    let w = pkt.width_sq(t).sqrt();
    let zc = pkt.centroid(t);
    let r_nodes = composite_gauss_legendre(0.0, r_max, 64, 16);
    let z_nodes = composite_gauss_legendre(zc - 12.0 * w, zc + 12.0 * w, 32, 16);

    let rows: Vec<[f64; 3]> = r_nodes
        .par_iter()
        .map(|&(r, wr)| {
            let mut acc = [Vec::new(), Vec::new(), Vec::new()];
            for &(z, wz) in &z_nodes {
                let wgt = 2.0 * PI * r * wr * wz;
                let rho = charge_density(state, r, 0.0, z, t);
                let j = current_density(state, r, 0.0, z, t);
                acc[0].push(wgt * rho);
                acc[1].push(wgt * r * r * rho / E_CHARGE);
                acc[2].push(wgt * 2.0 * r * j.r / E_CHARGE);
            }
            acc.map(|v| pairwise_sum(&v))
        })
        .collect();
    let col = |k: usize| pairwise_sum(&rows.iter().map(|r| r[k]).collect::<Vec<_>>());
    DensityMoments {
        charge: col(0),
        r_perp_sq: col(1),
        r_perp_sq_rate: col(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        for n in [1, 2, 5, 16, 64, 128] {
            let nodes = gauss_legendre(n);
            let total: f64 = nodes.iter().map(|p| p.1).sum();
            assert_relative_eq!(total, 2.0, max_relative = 1e-13);
            // exact for degree 2n−1
            let deg = 2 * n - 2;
            let integral: f64 = nodes.iter().map(|&(x, w)| w * x.powi(deg as i32)).sum();
            assert_relative_eq!(integral, 2.0 / (deg as f64 + 1.0), max_relative = 1e-12);
        }
    }

    #[test]
    fn sphere_weights_sum_to_area() {
        let q = SphereQuadrature::new(16, 4, 3.0).unwrap();
        let total = pairwise_sum(&q.nodes().iter().map(|n| n.2).collect::<Vec<_>>());
        assert_relative_eq!(total, 4.0 * PI * 9.0, max_relative = 1e-13);
        assert!(SphereQuadrature::new(8, 4, 1.0).is_err());
        assert!(TimeAverage::new(32, 1).is_err());
    }

    #[test]
    fn pairwise_is_order_fixed() {
        let v: Vec<f64> = (0..1000).map(|i| (i as f64 * 0.37).sin() * 1e-3).collect();
        assert_eq!(pairwise_sum(&v), pairwise_sum(&v.clone()));
        assert_relative_eq!(pairwise_sum(&v), v.iter().sum::<f64>(), max_relative = 1e-12);
    }

    #[test]
    fn finite_difference_of_sine() {
        let w = 3.7e11;
        let d = finite_difference(|t| (w * t).sin(), 0.0, 1, 1e-4 / w).unwrap();
        assert_relative_eq!(d, w, max_relative = 1e-8);
        assert_eq!(finite_difference(|_| 4.2, 1.0, 2, 0.1).unwrap(), 0.0);
        let d3 = finite_difference(|t| (w * t).sin(), 0.0, 3, 1e-3 / w).unwrap();
        assert_relative_eq!(d3, -w * w * w, max_relative = 1e-6);
        assert!(finite_difference(|t| t, 0.0, 4, 0.1).is_err());
        assert!(finite_difference(|t| t, 0.0, 1, 0.0).is_err());
    }

    #[test]
    fn slope_of_power_law() {
        let radii = log_grid(1.0, 1e9, 10);
        assert_relative_eq!(scaling_slope(|r| 5.0 / (r * r), &radii).unwrap(), -2.0, epsilon = 1e-12);
        assert_eq!(scaling_slope(|_| 0.0, &radii), Err(Error::IdenticallyZero));
        assert!(scaling_slope(|r| r, &radii[..4]).is_err());
    }

    #[test]
    fn adjudication_labels() {
        let v = adjudicate_normalization(1.0, 1.0, 1e-8);
        assert_eq!(v.matches, PowerNormalization::ClosedForm);
        let v = adjudicate_normalization(ANGULAR_SHAPE_INTEGRAL, 1.0, 1e-8);
        assert_eq!(v.matches, PowerNormalization::AngularIntegral);
        let v = adjudicate_normalization(2.0, 1.0, 1e-8);
        assert_eq!(v.matches, PowerNormalization::Neither);
    }
}
