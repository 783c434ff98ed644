//! Independent numerical machinery used by tests and acceptance checks:
//! trapezoid quadrature on frequency grids, brute-force spectrum centroids and
//! finite-difference differentiation.
//!
//! Nothing in here calls into the closed-form expressions it is used to
//! check; the only shared code path is amplitude evaluation. Summation runs
//! in fixed ascending index order so results are deterministic regardless of
//! how callers parallelize sampling.

use num_complex::Complex64;

use crate::error::{Result, WvaError};
use crate::scheme::{Port, SchemeConfig};

/// Uniform grid of `n_points` frequencies spanning [f_min, f_max], in Hz.
/// `n_points` must be odd so the grid also supports composite rules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyGrid {
    f_min: f64,
    f_max: f64,
    n_points: usize,
}

impl FrequencyGrid {
    pub fn new(f_min: f64, f_max: f64, n_points: usize) -> Result<Self> {
        if !(f_max > f_min) {
            return Err(WvaError::InvalidParameter(format!(
                "grid requires f_max > f_min, got [{f_min}, {f_max}]"
            )));
        }
        if n_points < 3 || n_points.is_multiple_of(2) {
            return Err(WvaError::InvalidParameter(format!(
                "grid requires an odd number of points >= 3, got {n_points}"
            )));
        }
        Ok(Self { f_min, f_max, n_points })
    }

    pub fn f_min(&self) -> f64 {
        self.f_min
    }

    pub fn f_max(&self) -> f64 {
        self.f_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.f_max - self.f_min) / (self.n_points - 1) as f64
    }

    /// Grid points in ascending order.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        let f_min = self.f_min;
        let n = self.n_points;
        (0..n).map(move |i| if i == n - 1 { self.f_max } else { f_min + i as f64 * h })
    }

    /// Samples a function on every grid point.
    pub fn sample<F: FnMut(f64) -> Complex64>(&self, mut f: F) -> Vec<Complex64> {
        self.points().map(&mut f).collect()
    }
}

/// Composite trapezoid rule over the grid. Exact for constants; for the
/// smooth, rapidly decaying integrands used here it converges
/// superalgebraically.
pub fn integrate(grid: &FrequencyGrid, samples: &[Complex64]) -> Result<Complex64> {
    if samples.len() != grid.n_points() {
        return Err(WvaError::InvalidParameter(format!(
            "expected {} samples, got {}",
            grid.n_points(),
            samples.len()
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, s) in samples.iter().enumerate() {
        let w = if i == 0 || i == samples.len() - 1 { 0.5 } else { 1.0 };
        acc += w * s;
    }
    Ok(acc * grid.spacing())
}

/// Brute-force spectrum centroid of the selected output port:
/// ∫f·|Φ(f)|² df / ∫|Φ(f)|² df.
pub fn numeric_centroid(cfg: &SchemeConfig, port: Port, grid: &FrequencyGrid) -> Result<f64> {
    let mut power = Vec::with_capacity(grid.n_points());
    let mut weighted = Vec::with_capacity(grid.n_points());
    for f in grid.points() {
        let (u, v) = cfg.output_amplitudes(f);
        let amp = match port {
            Port::U => u,
            Port::V => v,
        };
        let p = amp.norm_sqr();
        power.push(Complex64::new(p, 0.0));
        weighted.push(Complex64::new(f * p, 0.0));
    }
    let total = integrate(grid, &power)?.re;
    if total < crate::scheme::DARK_PORT_FLOOR {
        return Err(WvaError::DegenerateConfiguration(
            "port power vanishes on the grid; centroid undefined".into(),
        ));
    }
    Ok(integrate(grid, &weighted)?.re / total)
}

/// 5-point central-difference derivative estimate,
/// (f(x−2h) − 8f(x−h) + 8f(x+h) − f(x+2h)) / (12h). Exact for polynomials up
/// to degree 4; evaluation failures propagate.
pub fn finite_difference<F>(mut f: F, x: f64, h: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(h > 0.0) {
        return Err(WvaError::InvalidParameter(format!("step must be positive, got {h}")));
    }
    let m2 = f(x - 2.0 * h)?;
    let m1 = f(x - h)?;
    let p1 = f(x + h)?;
    let p2 = f(x + 2.0 * h)?;
    Ok((m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h))
}

/// Default step for τ-derivatives, balancing truncation against roundoff at
/// double precision.
pub fn default_tau_step(tau: f64) -> f64 {
    (tau.abs() * 1e-4).max(1e-21)
}
