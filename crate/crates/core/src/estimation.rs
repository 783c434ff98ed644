//! Estimation-theoretic bounds: minimum discrimination error for a pair of
//! pure states, the quantum Cramér-Rao bound on delay estimation, and the
//! classical Fisher information of the Gaussian centroid estimator together
//! with its post-selection enhancement ratio.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::error::{Result, WvaError};
use crate::overlap::input_state_overlap;
use crate::pulse::PulseParams;
use crate::scheme::{centroid_derivative, SchemeConfig};

/// Fisher information of the centroid measurement with Gaussian outcome
/// noise σ, evaluated at the configured angle and at the two resonance
/// endpoints φ = 0 and φ = π.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FisherReport {
    /// Centroid-measurement standard deviation (Hz).
    pub sigma: f64,
    /// Mean detected photon number behind the projection.
    pub n_detected: f64,
    /// Fisher information at the configured angle (s⁻²).
    pub i_tau: f64,
    /// Closed-form value at φ = 0 (s⁻²).
    pub i_phi0: f64,
    /// Closed-form value at φ = π (s⁻²).
    pub i_phi_pi: f64,
    /// I_π/I₀ = (1 + γ)/(1 − γ).
    pub enhancement_ratio: f64,
}

/// Cramér-Rao lower bound on the variance of any unbiased delay estimator,
/// Var(τ̂) ≥ 1/(2N(ω₀² + B²)), with its square root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CramerRaoBound {
    pub variance: f64,
    pub rms: f64,
}

/// Minimum probability of error when discriminating two pure states with
/// squared overlap `overlap_sq`: ½(1 − √(1 − overlap_sq)).
///
/// Evaluated as ½·overlap_sq/(1 + √(1 − overlap_sq)), which is the same
/// quantity without the subtraction that destroys relative accuracy for
/// nearly orthogonal states.
pub fn helstrom_error(overlap_sq: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&overlap_sq) {
        return Err(WvaError::InvalidParameter(format!(
            "squared overlap must lie in [0, 1], got {overlap_sq}"
        )));
    }
    Ok(0.5 * overlap_sq / (1.0 + (1.0 - overlap_sq).sqrt()))
}

/// Minimum error probability versus photon number for a fixed configuration:
/// composes the input state overlap with the discrimination bound pointwise.
pub fn error_vs_photons(cfg: &SchemeConfig, n_list: &[f64]) -> Result<Vec<(f64, f64)>> {
    let per_photon = {
        let unit = SchemeConfig { n_in: 1.0, ..*cfg };
        input_state_overlap(&unit).exponent
    };
    n_list
        .iter()
        .map(|&n| {
            if !(n >= 0.0) {
                return Err(WvaError::InvalidParameter(format!(
                    "photon number must be >= 0, got {n}"
                )));
            }
            let overlap_sq = (-n * per_photon).exp();
            Ok((n, helstrom_error(overlap_sq)?))
        })
        .collect()
}

/// Quantum Cramér-Rao bound for delay estimation with a coherent pulse:
/// Var(τ̂) ≥ 1/(2N(ω₀² + B²)).
pub fn cramer_rao_bound(pulse: &PulseParams, n: f64) -> Result<CramerRaoBound> {
    if !(n > 0.0) || !n.is_finite() {
        return Err(WvaError::InvalidParameter(format!(
            "photon number must be positive and finite, got {n}"
        )));
    }
    let omega0 = pulse.omega0();
    let b = pulse.bandwidth();
    let variance = 1.0 / (2.0 * n * (omega0 * omega0 + b * b));
    Ok(CramerRaoBound { variance, rms: variance.sqrt() })
}

/// Fisher information I(τ) = (N_detected/σ²)·(∂Δf/∂τ)² of the centroid
/// estimate under the Gaussian outcome model with τ-independent σ.
pub fn fisher_information(cfg: &SchemeConfig, sigma: f64, n_detected: f64) -> Result<f64> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(WvaError::InvalidParameter(format!(
            "sigma must be positive and finite, got {sigma}"
        )));
    }
    if !(n_detected >= 0.0) {
        return Err(WvaError::InvalidParameter(format!(
            "detected photon number must be >= 0, got {n_detected}"
        )));
    }
    let slope = centroid_derivative(cfg)?;
    Ok(n_detected / (sigma * sigma) * slope * slope)
}

/// Closed-form Fisher information at the two resonance endpoints for a
/// photon budget N₀ split by the projection:
/// at φ = 0 the detector sees N₀(1 + γ)/2 photons and
/// I₀ = N₀γ²B⁴(ω₀τ)²/(8π²σ²(1 + γ));
/// at φ = π it sees N₀(1 − γ)/2 and
/// I_π = N₀γ²B⁴(ω₀τ)²/(8π²σ²(1 − γ)).
/// The ratio I_π/I₀ = (1 + γ)/(1 − γ) is independent of both σ and N₀.
pub fn fisher_endpoints(
    pulse: &PulseParams,
    tau: f64,
    n0: f64,
    sigma: f64,
) -> Result<FisherReport> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(WvaError::InvalidParameter(format!(
            "sigma must be positive and finite, got {sigma}"
        )));
    }
    if !(n0 > 0.0) || !n0.is_finite() {
        return Err(WvaError::InvalidParameter(format!(
            "photon budget must be positive and finite, got {n0}"
        )));
    }
    let overlap = pulse.delay_overlap(tau);
    if tau == 0.0 || overlap.complement == 0.0 {
        return Err(WvaError::DegenerateConfiguration(
            "tau = 0 gives gamma = 1; the enhancement ratio is undefined".into(),
        ));
    }
    let common = n0
        * overlap.gamma.powi(2)
        * pulse.bandwidth().powi(4)
        * (pulse.omega0() * tau).powi(2)
        / (8.0 * PI * PI * sigma * sigma);
    let i_phi0 = common / (1.0 + overlap.gamma);
    let i_phi_pi = common / overlap.complement;
    Ok(FisherReport {
        sigma,
        n_detected: n0,
        i_tau: i_phi_pi,
        i_phi0,
        i_phi_pi,
        enhancement_ratio: (1.0 + overlap.gamma) / overlap.complement,
    })
}

/// Full Fisher report for one configuration: the composed-path I(τ) at the
/// configured angle plus the closed-form endpoints for the same photon
/// budget.
pub fn fisher_report(cfg: &SchemeConfig, sigma: f64) -> Result<FisherReport> {
    let n_detected =
        cfg.n_in * crate::scheme::port_transmission(cfg, crate::scheme::Port::U).fraction;
    let i_tau = fisher_information(cfg, sigma, n_detected)?;
    let endpoints = fisher_endpoints(&cfg.pulse, cfg.tau, cfg.n_in, sigma)?;
    Ok(FisherReport { sigma, n_detected, i_tau, ..endpoints })
}

/// Post-selection angles realizing the resonance endpoints: φ = 0 at
/// θ = ω₀τ − π/2 and φ = π at θ = ω₀τ + π/2.
pub fn endpoint_angles(pulse: &PulseParams, tau: f64) -> (f64, f64) {
    let omega0_tau = pulse.omega0() * tau;
    (omega0_tau - FRAC_PI_2, omega0_tau + FRAC_PI_2)
}
