//! One-stop summary of a single configuration: the û-port mode overlap, the
//! full state overlap, the discrimination bound, and the power budget.

use serde::Serialize;

use crate::error::Result;
use crate::estimation::helstrom_error;
use crate::overlap::{input_state_overlap, mode_overlap_closed};
use crate::scheme::{port_transmission, Port, PortTransmission, SchemeConfig};

/// Everything needed to judge how distinguishable the delayed and undelayed
/// states are for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistinguishabilityReport {
    /// |ρ| of the û-port modes at delays τ₀ and τ₀ + τ.
    pub rho_abs: f64,
    /// Squared state overlap |⟨Φ₀|Φ₁⟩|².
    pub overlap_sq: f64,
    /// Cancellation-safe exponent: overlap_sq = exp(−exponent).
    pub exponent: f64,
    /// Minimum discrimination error probability.
    pub helstrom_error: f64,
    pub transmission_u: PortTransmission,
    pub transmission_v: PortTransmission,
    /// Mean photon number behind the û-port projection.
    pub n_out: f64,
}

/// Builds the report for one configuration. Fails on exactly dark ports,
/// where the mode overlap is undefined.
pub fn distinguishability_report(cfg: &SchemeConfig) -> Result<DistinguishabilityReport> {
    let rho = mode_overlap_closed(cfg, Port::U)?.rho;
    let state = input_state_overlap(cfg);
    let transmission_u = port_transmission(cfg, Port::U);
    let transmission_v = port_transmission(cfg, Port::V);
    Ok(DistinguishabilityReport {
        rho_abs: rho.norm().min(1.0),
        overlap_sq: state.overlap_sq,
        exponent: state.exponent,
        helstrom_error: helstrom_error(state.overlap_sq)?,
        transmission_u,
        transmission_v,
        n_out: cfg.n_in * transmission_u.fraction,
    })
}
