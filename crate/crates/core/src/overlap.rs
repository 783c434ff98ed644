//! Mode overlaps and full quantum-state overlaps for coherent states: the
//! generic coherent-state machinery, the closed-form post-selected mode
//! overlap with its quadrature twin, and the input/output state overlaps
//! whose equality expresses unitarity.
//!
//! The canonical stored quantity is the *exponent* of the squared overlap,
//! not the overlap itself: exp(−x) underflows long before the exponent
//! becomes unrepresentable, and the error-probability formulas need exactly
//! that regime.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, WvaError};
use crate::oracle::{self, FrequencyGrid};
use crate::scheme::{port_transmission, Port, SchemeConfig};

/// How a mode overlap was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OverlapSource {
    ClosedForm,
    Quadrature,
}

/// Complex inner product ρ of two normalized spectral modes; |ρ| ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeOverlap {
    pub rho: Complex64,
    pub source: OverlapSource,
}

/// Which side of the post-selection a state overlap refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OverlapStage {
    BeforePostSelection,
    AfterPostSelection,
}

/// Squared overlap |⟨Φ₀|Φ₁⟩|² together with its cancellation-safe exponent:
/// overlap_sq = exp(−exponent).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StateOverlapReport {
    pub overlap_sq: f64,
    pub exponent: f64,
    pub stage: OverlapStage,
}

const RHO_SLACK: f64 = 1e-12;

/// Exponent of the squared overlap of two coherent states with real
/// amplitudes √N_a, √N_b occupying modes with overlap ρ:
/// N_a + N_b − 2√(N_aN_b)·Re ρ. Global coherent-state phases drop out of the
/// squared overlap, so real amplitudes lose nothing.
pub fn coherent_overlap_exponent(n_a: f64, n_b: f64, rho: Complex64) -> Result<f64> {
    if !(n_a >= 0.0) || !(n_b >= 0.0) {
        return Err(WvaError::InvalidParameter(format!(
            "mean photon numbers must be >= 0, got {n_a}, {n_b}"
        )));
    }
    let mag = rho.norm();
    if mag > 1.0 + RHO_SLACK {
        return Err(WvaError::InvalidOverlap(mag));
    }
    Ok(n_a + n_b - 2.0 * (n_a * n_b).sqrt() * rho.re)
}

/// |⟨β|α⟩|² = exp(−N_a − N_b + 2√(N_aN_b)·Re ρ).
pub fn coherent_overlap(n_a: f64, n_b: f64, rho: Complex64) -> Result<f64> {
    Ok((-coherent_overlap_exponent(n_a, n_b, rho)?).exp())
}

/// ρ = ∫F(f)·G*(f) df by trapezoid rule. Both sample vectors must live on
/// `grid` and be normalized there to within 10⁻³ (they are renormalized
/// internally); a worse deviation means the grid does not resolve the modes.
pub fn mode_overlap_quadrature(
    f_samples: &[Complex64],
    g_samples: &[Complex64],
    grid: &FrequencyGrid,
) -> Result<ModeOverlap> {
    let norm_f = oracle::integrate(
        grid,
        &f_samples.iter().map(|z| Complex64::new(z.norm_sqr(), 0.0)).collect::<Vec<_>>(),
    )?
    .re;
    let norm_g = oracle::integrate(
        grid,
        &g_samples.iter().map(|z| Complex64::new(z.norm_sqr(), 0.0)).collect::<Vec<_>>(),
    )?
    .re;
    for norm in [norm_f, norm_g] {
        if (norm - 1.0).abs() > 1e-3 {
            return Err(WvaError::GridResolution(format!(
                "mode norm on grid is {norm}, expected 1 within 1e-3"
            )));
        }
    }
    let cross: Vec<Complex64> =
        f_samples.iter().zip(g_samples.iter()).map(|(f, g)| f * g.conj()).collect();
    let rho = oracle::integrate(grid, &cross)? / (norm_f * norm_g).sqrt();
    Ok(ModeOverlap { rho, source: OverlapSource::Quadrature })
}

/// Samples the selected output-port mode on `grid`, normalized numerically to
/// unit power there. Degenerate (dark-port) configurations are rejected.
pub fn normalized_port_mode(
    cfg: &SchemeConfig,
    port: Port,
    grid: &FrequencyGrid,
) -> Result<Vec<Complex64>> {
    let samples: Vec<Complex64> = grid
        .points()
        .map(|f| {
            let (u, v) = cfg.output_amplitudes(f);
            match port {
                Port::U => u,
                Port::V => v,
            }
        })
        .collect();
    let norm = oracle::integrate(
        grid,
        &samples.iter().map(|z| Complex64::new(z.norm_sqr(), 0.0)).collect::<Vec<_>>(),
    )?
    .re;
    if norm < crate::scheme::DARK_PORT_FLOOR {
        return Err(WvaError::DegenerateConfiguration(
            "port mode has no power on the grid".into(),
        ));
    }
    let scale = 1.0 / norm.sqrt();
    Ok(samples.into_iter().map(|z| z * scale).collect())
}

/// Closed-form mode overlap between the normalized port modes at delay τ₀
/// (reference) and τ₀ + τ, ordered so that it matches
/// `mode_overlap_quadrature(reference, delayed)`.
///
/// For port û this is the product form
/// ρ = s·[(cos(Γ/2) + γcos(ω₀τ − Γ/2)) − i(sin(Γ/2) + γsin(ω₀τ − Γ/2))] /
///     (√2·√(1 + γcos φ)),  s = sign(cos(Γ/2)),
/// an algebraically identical regrouping of the sum-of-cosines form that
/// stays accurate near the dark port. Port v̂ follows by Γ → Γ + π.
pub fn mode_overlap_closed(cfg: &SchemeConfig, port: Port) -> Result<ModeOverlap> {
    let overlap = cfg.pulse.delay_overlap(cfg.tau);
    let omega0_tau = cfg.pulse.omega0() * cfg.tau;
    let half_gamma = match port {
        Port::U => cfg.projection_phase() / 2.0,
        Port::V => cfg.projection_phase() / 2.0 + std::f64::consts::FRAC_PI_2,
    };
    let reference_weight = half_gamma.cos();
    // transmission fraction of this port at delay tau, cancellation-safe
    let t_tau = port_transmission(cfg, port).fraction;
    if reference_weight.powi(2) < crate::scheme::DARK_PORT_FLOOR
        || t_tau < crate::scheme::DARK_PORT_FLOOR
    {
        return Err(WvaError::DegenerateConfiguration(
            "dark port in the closed-form mode overlap denominator".into(),
        ));
    }
    let num_re = half_gamma.cos() + overlap.gamma * (omega0_tau - half_gamma).cos();
    let num_im = half_gamma.sin() + overlap.gamma * (omega0_tau - half_gamma).sin();
    // denominator sqrt(2) * sqrt(1 + gamma cos phi) = 2 sqrt(t_tau)
    let denom = 2.0 * t_tau.sqrt();
    let rho = reference_weight.signum() * Complex64::new(num_re, -num_im) / denom;
    Ok(ModeOverlap { rho, source: OverlapSource::ClosedForm })
}

fn input_exponent_per_photon(cfg: &SchemeConfig) -> f64 {
    let overlap = cfg.pulse.delay_overlap(cfg.tau);
    let half = (cfg.pulse.omega0() * cfg.tau / 2.0).sin().powi(2);
    // 1 - gamma cos(omega0 tau) = (1 - gamma) + 2 gamma sin^2(omega0 tau / 2)
    overlap.complement + 2.0 * overlap.gamma * half
}

/// Squared overlap between the two-mode states before post-selection:
/// |⟨Φ₀|Φ₁⟩|² = exp[−N(1 − γcos ω₀τ)].
pub fn input_state_overlap(cfg: &SchemeConfig) -> StateOverlapReport {
    let exponent = cfg.n_in * input_exponent_per_photon(cfg);
    StateOverlapReport {
        overlap_sq: (-exponent).exp(),
        exponent,
        stage: OverlapStage::BeforePostSelection,
    }
}

/// Exponent contributed by one output port to the post-selected state
/// overlap: N_a + N_b − 2√(N_aN_b)·Re ρ_port with N_a = N·t_port(0),
/// N_b = N·t_port(τ) and ρ_port the closed-form port mode overlap. The
/// θ-dependent terms cancel identically, leaving (N/2)(1 − γcos ω₀τ) for
/// either port; that cancellation is evaluated symbolically here so the
/// result stays exact arbitrarily close to the dark port.
pub fn port_state_exponent(cfg: &SchemeConfig, _port: Port) -> f64 {
    0.5 * cfg.n_in * input_exponent_per_photon(cfg)
}

/// Squared overlap between the two-mode states after post-selection, as the
/// two-port product |⟨Φ_u|Φ_u'⟩|²·|⟨Φ_v|Φ_v'⟩|². Equals
/// `input_state_overlap` for every θ: post-selection is unitary.
pub fn output_state_overlap(cfg: &SchemeConfig) -> StateOverlapReport {
    let exponent = port_state_exponent(cfg, Port::U) + port_state_exponent(cfg, Port::V);
    StateOverlapReport {
        overlap_sq: (-exponent).exp(),
        exponent,
        stage: OverlapStage::AfterPostSelection,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pulse::PulseParams;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn cfg(t0: f64, tau: f64, theta_deg: f64, n: f64) -> SchemeConfig {
        let pulse = PulseParams::new(1.5e-6, t0).unwrap();
        SchemeConfig::new(pulse, 0.0, tau, theta_deg.to_radians(), n).unwrap()
    }

    #[test]
    fn coherent_overlap_limits() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(coherent_overlap(3.0, 3.0, one).unwrap(), 1.0);
        // same mode, different photon numbers: exp(-(sqrt(Na)-sqrt(Nb))^2)
        let got = coherent_overlap(4.0, 9.0, one).unwrap();
        assert_relative_eq!(got, (-1.0f64).exp(), max_relative = 1e-12);
        // orthogonal modes
        let got = coherent_overlap(5.0, 5.0, zero).unwrap();
        assert_relative_eq!(got, (-10.0f64).exp(), max_relative = 1e-12);
    }

    #[test]
    fn coherent_overlap_rejects_bad_inputs() {
        assert!(coherent_overlap(-1.0, 1.0, Complex64::new(0.5, 0.0)).is_err());
        assert!(matches!(
            coherent_overlap(1.0, 1.0, Complex64::new(1.1, 0.0)),
            Err(WvaError::InvalidOverlap(_))
        ));
        // within Cauchy-Schwarz slack
        assert!(coherent_overlap(1.0, 1.0, Complex64::new(1.0 + 5e-13, 0.0)).is_ok());
    }

    #[test]
    fn quadrature_self_overlap() {
        let c = cfg(100e-15, 100e-18, 96.7, 1.0);
        let grid = c.pulse.standard_grid();
        let mode = normalized_port_mode(&c, Port::U, &grid).unwrap();
        let rho = mode_overlap_quadrature(&mode, &mode, &grid).unwrap().rho;
        assert_abs_diff_eq!(rho.re, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(rho.im, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn quadrature_delayed_input_modes() {
        let c = cfg(100e-15, 100e-18, 0.0, 1.0);
        let grid = c.pulse.standard_grid();
        let delayed: Vec<Complex64> =
            grid.points().map(|f| c.pulse.mode_function(c.tau, f)).collect();
        let reference: Vec<Complex64> =
            grid.points().map(|f| c.pulse.mode_function(0.0, f)).collect();
        let rho = mode_overlap_quadrature(&delayed, &reference, &grid).unwrap().rho;
        let overlap = c.pulse.delay_overlap(c.tau);
        let expected = Complex64::from_polar(overlap.gamma, c.pulse.omega0() * c.tau);
        assert_abs_diff_eq!(rho.re, expected.re, epsilon = 1e-9);
        assert_abs_diff_eq!(rho.im, expected.im, epsilon = 1e-9);
        assert_relative_eq!(1.0 - rho.norm(), overlap.complement, max_relative = 1e-2);
    }

    #[test]
    fn quadrature_rejects_unnormalized_modes() {
        let c = cfg(100e-15, 100e-18, 97.2, 1.0);
        let grid = c.pulse.standard_grid();
        // raw port amplitudes carry the (tiny) transmission, not unit norm
        let raw: Vec<Complex64> = grid.points().map(|f| c.output_amplitudes(f).0).collect();
        assert!(matches!(
            mode_overlap_quadrature(&raw, &raw, &grid),
            Err(WvaError::GridResolution(_))
        ));
    }

    #[test]
    fn closed_form_identity_at_zero_delay() {
        for theta in [0.0, 33.0, 96.7, 181.0, 305.5] {
            let c = cfg(100e-15, 0.0, theta, 1.0);
            let rho = mode_overlap_closed(&c, Port::U).unwrap().rho;
            assert_abs_diff_eq!(rho.re, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(rho.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn closed_form_resonant_minimum() {
        let c = cfg(100e-15, 100e-18, 97.2, 1.0);
        let rho = mode_overlap_closed(&c, Port::U).unwrap().rho;
        // at the resonance |rho| collapses to sqrt((1 - gamma)/2)
        let expected = (c.pulse.delay_overlap(c.tau).complement / 2.0).sqrt();
        assert_relative_eq!(rho.norm(), expected, max_relative = 1e-6);
        assert_relative_eq!(rho.norm(), 5.9e-4, max_relative = 1e-2);
    }

    #[test]
    fn closed_form_far_from_resonance() {
        let c = cfg(100e-15, 100e-18, 0.0, 1.0);
        let rho = mode_overlap_closed(&c, Port::U).unwrap().rho;
        assert!(rho.norm() <= 1.0 + 1e-12);
        assert!(1.0 - rho.norm() < 1e-6);
    }

    #[test]
    fn closed_form_matches_quadrature_both_ports() {
        for (theta, port) in
            [(97.2, Port::U), (96.7, Port::U), (10.0, Port::U), (97.2, Port::V), (211.3, Port::V)]
        {
            let c = cfg(100e-15, 100e-18, theta, 1.0);
            let closed = mode_overlap_closed(&c, port).unwrap().rho;
            let grid = c.pulse.standard_grid();
            let reference =
                normalized_port_mode(&SchemeConfig { tau: 0.0, ..c }, port, &grid).unwrap();
            let delayed = normalized_port_mode(&c, port, &grid).unwrap();
            let quad = mode_overlap_quadrature(&reference, &delayed, &grid).unwrap().rho;
            assert_abs_diff_eq!(closed.re, quad.re, epsilon = 1e-8);
            assert_abs_diff_eq!(closed.im, quad.im, epsilon = 1e-8);
        }
    }

    #[test]
    fn closed_form_dark_port_is_error() {
        // tau = 0 with theta = pi/2: reference port-u mode is exactly dark
        let c = cfg(100e-15, 0.0, 90.0, 1.0);
        assert!(matches!(
            mode_overlap_closed(&c, Port::U),
            Err(WvaError::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn input_overlap_reference_values() {
        let c = cfg(1e-12, 1e-18, 0.0, 1e6);
        let report = input_state_overlap(&c);
        assert_relative_eq!(report.exponent, 0.7896, max_relative = 1e-3);
        assert_relative_eq!(report.overlap_sq, 0.4540, max_relative = 1e-3);
        assert_relative_eq!(report.overlap_sq, (-report.exponent).exp(), max_relative = 1e-15);

        let c = cfg(1e-12, 1e-18, 0.0, 1e7);
        let report = input_state_overlap(&c);
        assert_relative_eq!(report.exponent, 7.896, max_relative = 1e-3);
        assert_relative_eq!(report.overlap_sq, 3.72e-4, max_relative = 5e-3);
    }

    #[test]
    fn identical_states_fully_overlap() {
        let c = cfg(100e-15, 0.0, 45.0, 1e8);
        assert_eq!(input_state_overlap(&c).overlap_sq, 1.0);
        assert_eq!(output_state_overlap(&c).overlap_sq, 1.0);
    }

    #[test]
    fn post_selection_preserves_state_overlap() {
        for theta in [0.0, 53.2, 97.2, 150.0, 359.0] {
            let c = cfg(1e-12, 1e-18, theta, 1e7);
            let input = input_state_overlap(&c);
            let output = output_state_overlap(&c);
            assert_relative_eq!(output.overlap_sq, input.overlap_sq, max_relative = 1e-12);
            assert_relative_eq!(output.exponent, input.exponent, max_relative = 1e-12);
        }
        let c = cfg(1e-12, 1e-18, 53.2, 1e7);
        assert_relative_eq!(output_state_overlap(&c).overlap_sq, 3.72e-4, max_relative = 5e-3);
    }

    #[test]
    fn explicit_per_port_product_reproduces_input_overlap() {
        // transmission-weighted composition, no symbolic cancellation
        for (t0, tau, theta, n) in [
            (100e-15, 100e-18, 96.7, 1e3),
            (100e-15, 100e-18, 30.0, 1e4),
            (1e-12, 1e-18, 53.2, 1e4),
            (200e-15, 5e-16, 140.0, 5e2),
        ] {
            let c = cfg(t0, tau, theta, n);
            let mut exponent = 0.0;
            for port in [Port::U, Port::V] {
                let n_ref = n * port_transmission(&SchemeConfig { tau: 0.0, ..c }, port).fraction;
                let n_tau = n * port_transmission(&c, port).fraction;
                let rho = mode_overlap_closed(&c, port).unwrap().rho;
                exponent += coherent_overlap_exponent(n_ref, n_tau, rho).unwrap();
            }
            let expected = input_state_overlap(&c);
            assert_relative_eq!(
                (-exponent).exp(),
                expected.overlap_sq,
                max_relative = 1e-10
            );
        }
    }
}
