//! Technical-noise detector models: a photon-budget-saturated detector with a
//! projection-angle solver, and a resolution-floor model that replaces the
//! mode overlap with an effective value the detection system can actually
//! resolve.

use serde::Serialize;

use crate::error::{Result, WvaError};
use crate::estimation::helstrom_error;
use crate::overlap::{
    coherent_overlap_exponent, input_state_overlap, mode_overlap_closed, OverlapStage,
    StateOverlapReport,
};
use crate::scheme::{port_transmission, Port, SchemeConfig};

/// Technical-noise model of the detection system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum DetectorLimits {
    /// The detector saturates above `n0` photons.
    PhotonBudget { n0: f64 },
    /// The detector cannot resolve modes with overlap above the floor `a`;
    /// `n` controls how sharp the floor is.
    ResolutionFloor { a: f64, n: u32 },
}

impl DetectorLimits {
    pub fn validate(&self) -> Result<()> {
        match *self {
            DetectorLimits::PhotonBudget { n0 } => {
                if !(n0 > 0.0) || !n0.is_finite() {
                    return Err(WvaError::InvalidParameter(format!(
                        "photon budget must be positive and finite, got {n0}"
                    )));
                }
            }
            DetectorLimits::ResolutionFloor { a, n } => {
                if !(a > 0.0 && a < 1.0) {
                    return Err(WvaError::InvalidParameter(format!(
                        "resolution floor must satisfy 0 < a < 1, got {a}"
                    )));
                }
                if n < 1 {
                    return Err(WvaError::InvalidParameter(
                        "sharpness exponent must be >= 1".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Squared state overlap achievable when a saturating detector sees exactly
/// `n0` photons after projection into port û: the input flux is raised to
/// N_in = 2N₀/(1 + γcos(ω₀τ − Γ)), giving
/// overlap_sq = exp[−2N₀(1 − γcos ω₀τ)/(1 + γcos(ω₀τ − Γ))].
pub fn saturated_overlap(cfg: &SchemeConfig, n0: f64) -> Result<StateOverlapReport> {
    DetectorLimits::PhotonBudget { n0 }.validate()?;
    let transmission = port_transmission(cfg, Port::U).fraction;
    if transmission < crate::scheme::DARK_PORT_FLOOR {
        return Err(WvaError::DegenerateConfiguration(
            "port u is exactly dark; no photons reach the detector".into(),
        ));
    }
    let per_photon = {
        let unit = SchemeConfig { n_in: 1.0, ..*cfg };
        input_state_overlap(&unit).exponent
    };
    // 1 + gamma cos(omega0 tau - Gamma) = 2 * transmission, cancellation-safe
    let exponent = n0 * per_photon / transmission;
    Ok(StateOverlapReport {
        overlap_sq: (-exponent).exp(),
        exponent,
        stage: OverlapStage::AfterPostSelection,
    })
}

/// Solves ½[1 + γcos(ω₀τ − Γ)] = N₀/N_in for the post-selection angle.
/// Returns both roots per period as θ = Γ − π/2, canonical in [0, 2π),
/// sorted ascending.
pub fn solve_projection_for_budget(cfg: &SchemeConfig, n_in: f64, n0: f64) -> Result<Vec<f64>> {
    if !(n_in > 0.0) || !(n0 > 0.0) || n0 > n_in {
        return Err(WvaError::InvalidParameter(format!(
            "photon numbers must satisfy 0 < N0 <= N_in, got N0 = {n0}, N_in = {n_in}"
        )));
    }
    let target = n0 / n_in;
    let overlap = cfg.pulse.delay_overlap(cfg.tau);
    let min = 0.5 * overlap.complement;
    let max = 0.5 * (1.0 + overlap.gamma);
    if target < min || target > max {
        return Err(WvaError::NoSolution { required: target, min, max });
    }
    let cos_detuning = ((2.0 * target - 1.0) / overlap.gamma).clamp(-1.0, 1.0);
    let detuning = cos_detuning.acos();
    let omega0_tau = cfg.pulse.omega0() * cfg.tau;
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut roots: Vec<f64> = [omega0_tau - detuning, omega0_tau + detuning]
        .into_iter()
        .map(|projection_phase| {
            (projection_phase - std::f64::consts::FRAC_PI_2).rem_euclid(two_pi)
        })
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(roots)
}

/// Effective mode overlap seen by a resolution-limited detection system:
/// ρ_eff = 1 − (1 − ρ)·exp[−(ρ/a)ⁿ]. Fixed points at ρ = 0 and ρ = 1; above
/// the floor `a` the modes become effectively indistinguishable.
pub fn effective_overlap(rho_abs: f64, a: f64, n: u32) -> Result<f64> {
    if !(0.0..=1.0).contains(&rho_abs) {
        return Err(WvaError::InvalidParameter(format!(
            "mode overlap magnitude must lie in [0, 1], got {rho_abs}"
        )));
    }
    DetectorLimits::ResolutionFloor { a, n }.validate()?;
    Ok(1.0 - (1.0 - rho_abs) * (-(rho_abs / a).powi(n as i32)).exp())
}

/// Minimum error probability with a resolution-limited detector: each port's
/// mode-overlap magnitude is pushed through the effective-overlap floor, then
/// recombined into the per-port coherent-overlap product at the geometric
/// mean of the two states' port photon numbers, and the result goes through
/// the discrimination bound.
///
/// The floor models the detector's inability to tell the *mode shapes* apart;
/// only the shape distinguishability is floored, so a config whose modes sit
/// above the floor is pinned at P_error = 0.5 no matter how bright the
/// signal.
pub fn resolution_limited_error(cfg: &SchemeConfig, n: f64, a: f64, floor_n: u32) -> Result<f64> {
    if !(n >= 0.0) || !n.is_finite() {
        return Err(WvaError::InvalidParameter(format!(
            "photon number must be finite and >= 0, got {n}"
        )));
    }
    let mut exponent = 0.0;
    for port in [Port::U, Port::V] {
        let rho = mode_overlap_closed(cfg, port)?.rho;
        let floored = effective_overlap(rho.norm().min(1.0), a, floor_n)?;
        let n_ref = n * port_transmission(&SchemeConfig { tau: 0.0, ..*cfg }, port).fraction;
        let n_tau = n * port_transmission(cfg, port).fraction;
        let n_mean = (n_ref * n_tau).sqrt();
        exponent +=
            coherent_overlap_exponent(n_mean, n_mean, num_complex::Complex64::new(floored, 0.0))?;
    }
    helstrom_error((-exponent).exp())
}
