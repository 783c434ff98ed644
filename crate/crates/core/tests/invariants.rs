//! Property-based invariants over randomized configurations.

use proptest::prelude::*;

use wva::{
    effective_overlap, helstrom_error, input_state_overlap, mode_overlap_closed,
    output_state_overlap, port_transmission, Port, PulseParams, SchemeConfig,
};

fn pulse_strategy() -> impl Strategy<Value = PulseParams> {
    // T0 in [50 fs, 2 ps], lambda0 in [0.5 um, 3 um]
    ((50e-15..2e-12f64), (0.5e-6..3e-6f64))
        .prop_map(|(t0, lambda0)| PulseParams::new(lambda0, t0).unwrap())
}

fn config_strategy() -> impl Strategy<Value = SchemeConfig> {
    (
        pulse_strategy(),
        -10e-15..10e-15f64,
        0.0..std::f64::consts::TAU,
        0.0..1e9f64,
    )
        .prop_map(|(pulse, tau, theta, n)| SchemeConfig::new(pulse, 0.0, tau, theta, n).unwrap())
}

proptest! {
    #[test]
    fn transmissions_conserve_power(cfg in config_strategy()) {
        let u = port_transmission(&cfg, Port::U).fraction;
        let v = port_transmission(&cfg, Port::V).fraction;
        prop_assert!(u >= 0.0 && v >= 0.0);
        prop_assert!((u + v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn mode_overlap_within_unit_disk(cfg in config_strategy()) {
        for port in [Port::U, Port::V] {
            if let Ok(overlap) = mode_overlap_closed(&cfg, port) {
                prop_assert!(overlap.rho.norm() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn delay_overlap_even_and_bounded(pulse in pulse_strategy(), tau in -10e-15..10e-15f64) {
        let pos = pulse.delay_overlap(tau);
        let neg = pulse.delay_overlap(-tau);
        prop_assert_eq!(pos.gamma, neg.gamma);
        prop_assert!(pos.gamma > 0.0 && pos.gamma <= 1.0);
        prop_assert!(pos.complement >= 0.0 && pos.complement < 1.0);
        // gamma + complement reconstructs 1 up to roundoff
        prop_assert!((pos.gamma + pos.complement - 1.0).abs() < 1e-15);
    }

    #[test]
    fn helstrom_error_range(overlap_sq in 0.0..=1.0f64) {
        let p = helstrom_error(overlap_sq).unwrap();
        prop_assert!((0.0..=0.5).contains(&p));
    }

    #[test]
    fn state_overlap_unitary(cfg in config_strategy()) {
        let input = input_state_overlap(&cfg);
        let output = output_state_overlap(&cfg);
        prop_assert!(input.exponent >= 0.0);
        prop_assert!((output.exponent - input.exponent).abs() <= 1e-12 * input.exponent.abs());
    }

    #[test]
    fn effective_overlap_stays_in_unit_interval(
        rho in 0.0..=1.0f64,
        a in 0.05..0.95f64,
        n in 1u32..200,
    ) {
        let eff = effective_overlap(rho, a, n).unwrap();
        prop_assert!((0.0..=1.0).contains(&eff));
        // the floor never makes states more distinguishable
        prop_assert!(eff >= rho - 1e-15);
    }

    #[test]
    fn centroid_shift_bounded_by_bandwidth_scale(cfg in config_strategy()) {
        // |Delta f| is capped by the spectrum living within a few rms widths
        if let Ok(shift) = wva::centroid_shift(&cfg) {
            let cap = 8.0 * cfg.pulse.bandwidth() / (2.0 * std::f64::consts::PI);
            let gamma = cfg.pulse.delay_overlap(cfg.tau).gamma;
            let t_u = port_transmission(&cfg, Port::U).fraction;
            // analytic bound: |Delta f| <= (|tau| ln2 / (pi T0^2)) * gamma / (2 t_u)
            let bound = cfg.tau.abs() * std::f64::consts::LN_2
                / (std::f64::consts::PI * cfg.pulse.t0().powi(2))
                * gamma
                / (2.0 * t_u);
            prop_assert!(shift.abs() <= bound * (1.0 + 1e-12) + f64::MIN_POSITIVE);
            // and the physical cap: the centroid cannot leave the occupied band
            prop_assert!(shift.abs() <= cap.max(bound));
        }
    }
}
