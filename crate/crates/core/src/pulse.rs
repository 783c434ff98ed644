//! Gaussian input pulse and everything derived purely from it: spectral and
//! temporal amplitudes, carrier frequency, rms bandwidth, the delay-overlap
//! factor γ and delayed mode functions.
//!
//! Internal units are strict SI: seconds, Hz, rad/s, meters. CLI-facing units
//! (fs, as, µm, degrees) are converted at the boundary.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, WvaError};
use crate::oracle::FrequencyGrid;

/// Speed of light in vacuum, m/s, rounded to three significant figures.
/// All scenario angles and figure-level values in this crate assume this
/// rounding (e.g. a 1.5 µm carrier is exactly 200 THz).
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Physical description of the Gaussian input pulse.
///
/// `t0` is the FWHM duration of the *intensity* profile |Ψ(t)|². The carrier
/// angular frequency is ω₀ = 2πc/λ₀ and the rms angular-frequency bandwidth is
/// B = √(2 ln 2)/T₀.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PulseParams {
    lambda0: f64,
    omega0: f64,
    t0: f64,
    bandwidth: f64,
}

/// Overlap magnitude γ between the pulse and a copy delayed by τ, together
/// with its complement 1 − γ.
///
/// The complement is computed through `expm1`, not by subtraction: in the
/// regimes of interest 1 − γ can be ~10⁻¹³, far below the unit roundoff of
/// `1.0 - gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DelayOverlap {
    pub gamma: f64,
    pub complement: f64,
}

impl PulseParams {
    /// Builds a pulse from wavelength (m) and FWHM duration (s).
    pub fn new(lambda0: f64, t0: f64) -> Result<Self> {
        if !(lambda0 > 0.0) || !lambda0.is_finite() {
            return Err(WvaError::InvalidParameter(format!(
                "lambda0 must be positive and finite, got {lambda0}"
            )));
        }
        if !(t0 > 0.0) || !t0.is_finite() {
            return Err(WvaError::InvalidParameter(format!(
                "t0 must be positive and finite, got {t0}"
            )));
        }
        let omega0 = 2.0 * PI * SPEED_OF_LIGHT / lambda0;
        let bandwidth = (2.0 * LN_2).sqrt() / t0;
        Ok(Self { lambda0, omega0, t0, bandwidth })
    }

    /// Wavelength λ₀ (m).
    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    /// Carrier angular frequency ω₀ = 2πc/λ₀ (rad/s).
    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// FWHM duration T₀ of the intensity profile (s).
    pub fn t0(&self) -> f64 {
        self.t0
    }

    /// Rms angular-frequency bandwidth B = √(2 ln 2)/T₀ (rad/s).
    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    /// Whether the pulse sits in the narrowband regime B < ω₀ that every
    /// CLI-accepted configuration must satisfy.
    pub fn is_narrowband(&self) -> bool {
        self.bandwidth < self.omega0
    }

    /// Normalized spectral amplitude Ψ(f) = (πT₀²/ln 2)^¼ exp(−π²T₀²f²/(2 ln 2)),
    /// in 1/√Hz. Even in f and L²-normalized: ∫|Ψ(f)|² df = 1.
    pub fn spectral_amplitude(&self, f: f64) -> f64 {
        let t0sq = self.t0 * self.t0;
        (PI * t0sq / LN_2).powf(0.25) * (-PI * PI * t0sq * f * f / (2.0 * LN_2)).exp()
    }

    /// Normalized temporal amplitude Ψ(t) = (4 ln 2/(πT₀²))^¼ exp(−2 ln 2 t²/T₀²),
    /// in 1/√s. The FWHM of |Ψ(t)|² equals T₀.
    pub fn temporal_amplitude(&self, t: f64) -> f64 {
        let t0sq = self.t0 * self.t0;
        (4.0 * LN_2 / (PI * t0sq)).powf(0.25) * (-2.0 * LN_2 * t * t / t0sq).exp()
    }

    /// γ = exp(−ln 2 τ²/T₀²) and its cancellation-safe complement.
    pub fn delay_overlap(&self, tau: f64) -> DelayOverlap {
        let x = -LN_2 * (tau / self.t0) * (tau / self.t0);
        DelayOverlap { gamma: x.exp(), complement: -x.exp_m1() }
    }

    /// Delayed mode function Φ evaluated at frequency offset f (Hz):
    /// Ψ(f)·exp(i(ω₀ + Ω)·delay) with Ω = 2πf. The modulus equals Ψ(f) for
    /// every delay.
    pub fn mode_function(&self, total_delay: f64, f: f64) -> Complex64 {
        let omega = 2.0 * PI * f;
        let phase = (self.omega0 + omega) * total_delay;
        Complex64::from_polar(self.spectral_amplitude(f), phase)
    }

    /// The standard quadrature grid for this pulse: symmetric about f = 0,
    /// half-width 8×(B/2π), 2¹⁴ + 1 uniformly spaced points. The Gaussian tail
    /// at 8 rms widths is below 10⁻²⁷, so trapezoid sums on this grid are
    /// accurate to roundoff.
    pub fn standard_grid(&self) -> FrequencyGrid {
        let half_width = 8.0 * self.bandwidth / (2.0 * PI);
        FrequencyGrid::new(-half_width, half_width, (1 << 14) + 1)
            .expect("standard grid parameters are always valid")
    }
}
