//! The interferometer with pre- and post-selection: two-port output
//! amplitudes, port powers and insertion loss, and the spectrum centroid
//! shift with its τ-derivative.
//!
//! Conventions: the post-selection projects onto û = (x̂ + ŷe^{iθ})/√2 and
//! v̂ = (x̂ − ŷe^{iθ})/√2. The projection phase is Γ = π/2 + θ and the
//! interference phase is φ = ω₀τ − Γ. Every occurrence of 1 ± cos(x) is
//! evaluated through 2cos²(x/2) / 2sin²(x/2) and 1 − γ through the expm1
//! complement, so dark-port neighbourhoods (1 − γ ≈ 10⁻¹³) keep full relative
//! accuracy.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, WvaError};
use crate::pulse::PulseParams;

/// Output port selector: projection onto û or v̂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Port {
    U,
    V,
}

/// Full experiment configuration: pulse, common delay τ₀, differential delay
/// τ, post-selection angle θ (radians) and mean input photon number.
///
/// |τ| ≪ T₀ is not enforced; the formulas are exact in τ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchemeConfig {
    pub pulse: PulseParams,
    pub tau0: f64,
    pub tau: f64,
    pub theta: f64,
    pub n_in: f64,
}

/// Fraction of input power surviving post-selection into one port, with the
/// same quantity in dB.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PortTransmission {
    pub fraction: f64,
    pub loss_db: f64,
}

impl SchemeConfig {
    pub fn new(pulse: PulseParams, tau0: f64, tau: f64, theta: f64, n_in: f64) -> Result<Self> {
        if !tau0.is_finite() || !tau.is_finite() || !theta.is_finite() {
            return Err(WvaError::InvalidParameter(
                "delays and post-selection angle must be finite".into(),
            ));
        }
        if !(n_in >= 0.0) || !n_in.is_finite() {
            return Err(WvaError::InvalidParameter(format!(
                "mean photon number must be finite and >= 0, got {n_in}"
            )));
        }
        Ok(Self { pulse, tau0, tau, theta, n_in })
    }

    /// Projection phase Γ = π/2 + θ.
    pub fn projection_phase(&self) -> f64 {
        FRAC_PI_2 + self.theta
    }

    /// Interference phase φ = ω₀τ − Γ.
    pub fn interference_phase(&self) -> f64 {
        self.pulse.omega0() * self.tau - self.projection_phase()
    }

    /// Un-normalized per-port spectral amplitudes (Φ_u, Φ_v) at frequency
    /// offset f (Hz):
    /// Φ_{u,v} = (Ψ(f)/2)·e^{i(ω₀+Ω)τ₀}·[1 ± e^{i(ω₀+Ω)τ − iΓ}], Ω = 2πf.
    pub fn output_amplitudes(&self, f: f64) -> (Complex64, Complex64) {
        let omega = 2.0 * PI * f;
        let carrier = self.pulse.omega0() + omega;
        let common = Complex64::from_polar(
            self.pulse.spectral_amplitude(f) / 2.0,
            carrier * self.tau0,
        );
        let inner = Complex64::from_polar(1.0, carrier * self.tau - self.projection_phase());
        (common * (1.0 + inner), common * (1.0 - inner))
    }
}

fn transmission_fraction(cfg: &SchemeConfig, tau: f64, port: Port) -> f64 {
    let overlap = cfg.pulse.delay_overlap(tau);
    let phi = cfg.pulse.omega0() * tau - cfg.projection_phase();
    // 1/2 (1 + gamma cos phi) = 1/2 [(1 - gamma) + 2 gamma cos^2(phi/2)]
    let half = match port {
        Port::U => (phi / 2.0).cos().powi(2),
        Port::V => (phi / 2.0).sin().powi(2),
    };
    0.5 * (overlap.complement + 2.0 * overlap.gamma * half)
}

/// P_out/P_in for the selected port: ½[1 + γcos(ω₀τ − Γ)] for û and
/// ½[1 − γcos(ω₀τ − Γ)] for v̂, plus the insertion loss 10·log₁₀(P_out/P_in).
pub fn port_transmission(cfg: &SchemeConfig, port: Port) -> PortTransmission {
    let fraction = transmission_fraction(cfg, cfg.tau, port);
    PortTransmission { fraction, loss_db: 10.0 * fraction.log10() }
}

/// [P_out(τ) − P_out(0)]/P_in for the selected port, computed exactly from
/// the per-port transmissions (γ included). For port v̂ this is
/// ½[cos Γ − γcos(ω₀τ − Γ)], which reduces to the γ → 1 approximation only in
/// that limit.
pub fn differential_power(cfg: &SchemeConfig, port: Port) -> f64 {
    transmission_fraction(cfg, cfg.tau, port) - transmission_fraction(cfg, 0.0, port)
}

/// Transmission below which a port counts as exactly dark. At an exactly dark
/// setting (φ = π with γ = 1) the transmission is analytically 0 but floating
/// point leaves ≲10⁻³² of roundoff; no physically distinct configuration gets
/// anywhere near this floor (the minimum reachable transmission is
/// (1 − γ)/2, already ~10⁻¹³ for τ/T₀ = 10⁻⁶).
pub(crate) const DARK_PORT_FLOOR: f64 = 1e-30;

fn require_bright_port_u(cfg: &SchemeConfig) -> Result<f64> {
    let t = transmission_fraction(cfg, cfg.tau, Port::U);
    if t < DARK_PORT_FLOOR {
        return Err(WvaError::DegenerateConfiguration(
            "port u is exactly dark; centroid undefined".into(),
        ));
    }
    Ok(t)
}

/// Centroid shift Δf (Hz) of the û-port spectrum relative to the input:
/// Δf = −(τ ln 2/(πT₀²))·γ sin φ / (1 + γcos φ).
pub fn centroid_shift(cfg: &SchemeConfig) -> Result<f64> {
    let t_u = require_bright_port_u(cfg)?;
    let overlap = cfg.pulse.delay_overlap(cfg.tau);
    let phi = cfg.interference_phase();
    let t0 = cfg.pulse.t0();
    // denominator (1 - gamma) + 2 gamma cos^2(phi/2) = 2 * t_u
    Ok(-(cfg.tau * LN_2 / (PI * t0 * t0)) * overlap.gamma * phi.sin() / (2.0 * t_u))
}

/// d(Δf)/dτ (Hz/s), the exact τ-derivative of the centroid shift including
/// dγ/dτ:
/// γB²[B²τ² sin φ − ω₀τ(γ + cos φ) − sin φ(1 + γcos φ)] / (2π(1 + γcos φ)²).
pub fn centroid_derivative(cfg: &SchemeConfig) -> Result<f64> {
    let t_u = require_bright_port_u(cfg)?;
    let overlap = cfg.pulse.delay_overlap(cfg.tau);
    let phi = cfg.interference_phase();
    let b = cfg.pulse.bandwidth();
    let omega0 = cfg.pulse.omega0();
    let tau = cfg.tau;
    let denom = 2.0 * t_u; // 1 + gamma cos phi, cancellation-safe
    let bracket = b * b * tau * tau * phi.sin()
        - omega0 * tau * (overlap.gamma + phi.cos())
        - phi.sin() * denom;
    Ok(overlap.gamma * b * b * bracket / (2.0 * PI * denom * denom))
}
