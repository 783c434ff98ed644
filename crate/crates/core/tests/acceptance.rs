//! Acceptance gate: one test per release criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see them). Tolerances are pinned
//! here and nowhere else; loosening them is a release decision, not a test
//! fix.

use std::f64::consts::PI;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;

use approx::{assert_abs_diff_eq, assert_relative_eq};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wva::oracle;
use wva::{
    cramer_rao_bound, effective_overlap, error_vs_photons, fisher_endpoints,
    input_state_overlap, mode_overlap_closed, mode_overlap_quadrature, output_state_overlap,
    port_transmission, resolution_limited_error, solve_projection_for_budget, Port, PulseParams,
    SchemeConfig,
};

fn criterion<F: FnOnce() + UnwindSafe>(number: u32, description: &str, body: F) {
    match catch_unwind(body) {
        Ok(()) => println!("criterion {number} [{description}]: PASS"),
        Err(payload) => {
            println!("criterion {number} [{description}]: FAIL");
            resume_unwind(payload);
        }
    }
}

fn scheme(lambda0: f64, t0: f64, tau: f64, theta_deg: f64, n: f64) -> SchemeConfig {
    let pulse = PulseParams::new(lambda0, t0).unwrap();
    SchemeConfig::new(pulse, 0.0, tau, theta_deg.to_radians(), n).unwrap()
}

/// Two-significant-digit agreement, checked by actually rounding to two
/// significant digits.
fn assert_two_sig_digits(value: f64, expected: &str) {
    let rounded = format!("{value:.1e}");
    assert_eq!(rounded, expected, "got {value:.6e}, expected {expected} at 2 significant digits");
}

#[test]
fn criterion_1_error_probability_vs_photon_number() {
    criterion(1, "discrimination error at N = 1e6 and 1e7", || {
        let cfg = scheme(1.5e-6, 1e-12, 1e-18, 0.0, 1.0);
        let curve = error_vs_photons(&cfg, &[1e6, 1e7]).unwrap();
        assert_two_sig_digits(curve[0].1, "1.3e-1");
        assert_two_sig_digits(curve[1].1, "9.3e-5");
    });
}

#[test]
fn criterion_2_budget_solver_root() {
    criterion(2, "photon-budget projection angle", || {
        let cfg = scheme(1.5e-6, 1e-12, 1e-18, 0.0, 1e7);
        let roots = solve_projection_for_budget(&cfg, 1e7, 1e6).unwrap();
        let root_deg: Vec<f64> = roots.iter().map(|r| r.to_degrees()).collect();
        assert!(
            root_deg.iter().any(|&r| (r - 53.2).abs() <= 0.1),
            "no root at 53.2 deg +- 0.1 deg, got {root_deg:?}"
        );
        let at_nominal = scheme(1.5e-6, 1e-12, 1e-18, 53.2, 1e7);
        let transmission = port_transmission(&at_nominal, Port::U).fraction;
        assert_abs_diff_eq!(transmission, 0.100, epsilon = 0.001);
    });
}

#[test]
fn criterion_3_overlap_minimum_at_resonance() {
    criterion(3, "mode-overlap minimum and insertion-loss maximum angle", || {
        let count = 1501; // 0.01 deg resolution over [90, 105] deg
        let mut best_theta_deg = f64::NAN;
        let mut best_rho = f64::MAX;
        let mut best_loss_db = f64::MAX;
        let mut max_loss_theta_deg = f64::NAN;
        for i in 0..count {
            let theta_deg = 90.0 + 15.0 * i as f64 / (count - 1) as f64;
            let cfg = scheme(1.5e-6, 100e-15, 100e-18, theta_deg, 1.0);
            // theta = 90 deg makes the reference port-u mode exactly dark;
            // sweeps flag such rows as degenerate and move on
            let Ok(overlap) = mode_overlap_closed(&cfg, Port::U) else {
                continue;
            };
            let rho = overlap.rho.norm();
            let loss_db = port_transmission(&cfg, Port::U).loss_db;
            if rho < best_rho {
                best_rho = rho;
                best_theta_deg = theta_deg;
            }
            if loss_db < best_loss_db {
                best_loss_db = loss_db;
                max_loss_theta_deg = theta_deg;
            }
        }
        assert_abs_diff_eq!(best_theta_deg, 97.2, epsilon = 0.02);
        // at the minimum the interference phase sits at the dark fringe
        let cfg = scheme(1.5e-6, 100e-15, 100e-18, best_theta_deg, 1.0);
        let phase_misfit = (cfg.interference_phase() + PI).abs();
        assert!(phase_misfit < 5e-4, "phase misfit {phase_misfit:.3e} rad");
        // minimum overlap and maximum insertion loss coincide
        assert_eq!(best_theta_deg, max_loss_theta_deg);
    });
}

#[test]
fn criterion_4_post_selection_unitarity() {
    criterion(4, "state overlap preserved by post-selection (1e3 random configs)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5741_0004);
        for _ in 0..1000 {
            let t0 = log_uniform(&mut rng, 50e-15, 2e-12);
            let tau = log_uniform(&mut rng, 1e-18, 10e-15);
            let theta_deg = rng.gen_range(0.0..360.0);
            let n = log_uniform(&mut rng, 1.0, 1e9);
            let cfg = scheme(1.5e-6, t0, tau, theta_deg, n);
            let input = input_state_overlap(&cfg);
            let output = output_state_overlap(&cfg);
            if input.overlap_sq > 0.0 {
                assert!(
                    (output.overlap_sq - input.overlap_sq).abs() / input.overlap_sq < 1e-12,
                    "overlap mismatch at t0={t0:e}, tau={tau:e}, theta={theta_deg}, n={n:e}"
                );
            } else {
                // squared overlap underflowed; the exponent carries the value
                assert_relative_eq!(output.exponent, input.exponent, max_relative = 1e-12);
            }
        }
    });
}

#[test]
fn criterion_5_oracle_equivalence() {
    criterion(5, "closed forms vs quadrature and finite differences (1e3 random configs)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5741_0005);
        let mut done = 0;
        while done < 1000 {
            let t0 = log_uniform(&mut rng, 50e-15, 2e-12);
            let tau = log_uniform(&mut rng, 1e-18, 10e-15);
            let theta_deg = rng.gen_range(0.0..360.0);
            let cfg = scheme(1.5e-6, t0, tau, theta_deg, 1.0);
            // skip near-dark configurations: the centroid is undefined on a
            // dark port and not numerically identifiable right next to one
            if port_transmission(&cfg, Port::U).fraction < 5e-4 {
                continue;
            }
            done += 1;

            let closed = mode_overlap_closed(&cfg, Port::U).unwrap().rho;
            let grid = cfg.pulse.standard_grid();
            let reference = wva::overlap::normalized_port_mode(
                &SchemeConfig { tau: 0.0, ..cfg },
                Port::U,
                &grid,
            )
            .unwrap();
            let delayed = wva::overlap::normalized_port_mode(&cfg, Port::U, &grid).unwrap();
            let quad = mode_overlap_quadrature(&reference, &delayed, &grid).unwrap().rho;
            assert_abs_diff_eq!(closed.norm(), quad.norm(), epsilon = 1e-8);

            let shift = wva::centroid_shift(&cfg).unwrap();
            let numeric = oracle::numeric_centroid(&cfg, Port::U, &grid).unwrap();
            let tolerance = (1e-6 * shift.abs()).max(1.0);
            assert_abs_diff_eq!(shift, numeric, epsilon = tolerance);

            let analytic = wva::centroid_derivative(&cfg).unwrap();
            let h = oracle::default_tau_step(cfg.tau);
            let fd = oracle::finite_difference(
                |tau| wva::centroid_shift(&SchemeConfig { tau, ..cfg }),
                cfg.tau,
                h,
            )
            .unwrap();
            assert_relative_eq!(analytic, fd, max_relative = 1e-6);
        }
    });
}

#[test]
fn criterion_6_fisher_enhancement_ratio() {
    criterion(6, "endpoint Fisher-information enhancement ratio", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5741_0006);
        for _ in 0..100 {
            let t0 = log_uniform(&mut rng, 50e-15, 2e-12);
            let tau = log_uniform(&mut rng, 1e-18, 10e-15);
            let pulse = PulseParams::new(1.5e-6, t0).unwrap();
            let report = fisher_endpoints(&pulse, tau, 1e6, 1e11).unwrap();
            let overlap = pulse.delay_overlap(tau);
            assert_relative_eq!(
                report.enhancement_ratio,
                (1.0 + overlap.gamma) / overlap.complement,
                max_relative = 1e-9
            );
        }

        let pulse = PulseParams::new(1.5e-6, 100e-15).unwrap();
        let baseline = fisher_endpoints(&pulse, 100e-18, 1e6, 1e11).unwrap().enhancement_ratio;
        assert_relative_eq!(baseline, 2.886e6, max_relative = 1e-3);
        for _ in 0..100 {
            let sigma = log_uniform(&mut rng, 1e6, 1e14);
            let n0 = log_uniform(&mut rng, 1.0, 1e9);
            let ratio = fisher_endpoints(&pulse, 100e-18, n0, sigma).unwrap().enhancement_ratio;
            assert_relative_eq!(ratio, baseline, max_relative = 1e-15);
        }
    });
}

#[test]
fn criterion_7_cramer_rao_bound() {
    criterion(7, "Cramer-Rao delay bound", || {
        let pulse = PulseParams::new(1.5e-6, 100e-15).unwrap();
        let bound = cramer_rao_bound(&pulse, 1e6).unwrap();
        assert_relative_eq!(bound.rms, 0.563e-18, max_relative = 5e-3);

        // exact 1/N scaling
        let double = cramer_rao_bound(&pulse, 2e6).unwrap();
        assert_eq!(double.variance, bound.variance / 2.0);

        // narrowband limit: bandwidth contribution vanishes
        let narrow = PulseParams::new(1.5e-6, 1e-9).unwrap();
        let cw = 1.0 / (2.0 * 1e6 * narrow.omega0().powi(2));
        assert_relative_eq!(cramer_rao_bound(&narrow, 1e6).unwrap().variance, cw, max_relative = 1e-6);

        // defining formula, recomputed here from scratch
        let direct = 1.0 / (2.0 * 1e6 * (pulse.omega0().powi(2) + pulse.bandwidth().powi(2)));
        assert_relative_eq!(bound.variance, direct, max_relative = 1e-15);
    });
}

#[test]
fn criterion_8_resolution_floor() {
    criterion(8, "effective-overlap floor and its error-probability consequences", || {
        assert_eq!(effective_overlap(0.0, 0.9, 100).unwrap(), 0.0);
        assert_eq!(effective_overlap(1.0, 0.9, 100).unwrap(), 1.0);
        assert_abs_diff_eq!(effective_overlap(0.5, 0.9, 100).unwrap(), 0.5, epsilon = 1e-6);
        assert!(effective_overlap(0.95, 0.9, 100).unwrap() > 0.999);

        // theta = 0: modes are indistinguishable to the detector at any N
        for n in [1.0, 1e4, 1e8, 1e12] {
            let cfg = scheme(1.5e-6, 100e-15, 100e-18, 0.0, n);
            assert_eq!(resolution_limited_error(&cfg, n, 0.9, 100).unwrap(), 0.5);
        }
        // theta = 97.2 deg: post-selection drives the overlap below the floor
        let mut previous = 0.5;
        for n in [1e4, 1e5, 1e6, 1e7, 1e8] {
            let cfg = scheme(1.5e-6, 100e-15, 100e-18, 97.2, n);
            let p = resolution_limited_error(&cfg, n, 0.9, 100).unwrap();
            assert!(p < previous, "error must strictly decrease with N, got {p} at N={n:e}");
            previous = p;
        }
    });
}

#[test]
fn criterion_9_cli_determinism() {
    criterion(9, "byte-identical CSV from repeated CLI runs", || {
        let dir = tempfile::tempdir().unwrap();
        let scenarios: &[(&str, &[&str])] = &[
            ("spectrum", &[]),
            ("centroid-sweep", &["--sweep", "theta-deg:90:105:151"]),
            ("overlap-sweep", &["--sweep", "theta-deg:90:105:151"]),
            (
                "error-curve",
                &["--t0-fs", "1000", "--tau-as", "1", "--sweep", "n-photons:0:1e7:101"],
            ),
            (
                "budget",
                &["--t0-fs", "1000", "--tau-as", "1", "--n-photons", "1e7", "--n0-photons", "1e6"],
            ),
            ("fisher", &["--theta-deg", "96.7", "--sigma-hz", "1e11"]),
            ("effective-overlap", &["--floor-a", "0.9", "--floor-n", "100"]),
            ("report", &["--theta-deg", "96.7"]),
        ];
        for (name, extra) in scenarios {
            let out = dir.path().join(format!("{name}.out"));
            let mut outputs = Vec::new();
            for run in 0..2 {
                let status = Command::new(env!("CARGO_BIN_EXE_wva"))
                    .arg(name)
                    .args(*extra)
                    .arg("--out")
                    .arg(&out)
                    .status()
                    .unwrap();
                assert!(status.success(), "scenario {name} run {run} failed");
                outputs.push(std::fs::read(&out).unwrap());
            }
            assert_eq!(outputs[0], outputs[1], "scenario {name} is not deterministic");
        }
    });
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}
