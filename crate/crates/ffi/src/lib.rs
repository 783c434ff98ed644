//! C ABI over the `wva` library: opaque scheme handles, status codes, and
//! flat `double` outputs so other languages can bind without knowing any Rust
//! types. The header is generated into `include/wva.h` at build time.
//!
//! Conventions:
//! - Every fallible call returns a [`WvaStatus`]; outputs go through pointers
//!   that are written only on `Ok`.
//! - All physical quantities are strict SI (meters, seconds, Hz, radians).
//! - Handles from `wva_scheme_new` must be released with `wva_scheme_free`.

use std::os::raw::c_char;

use wva::{Port, PulseParams, SchemeConfig, WvaError};

/// Status code for every fallible FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WvaStatus {
    Ok = 0,
    /// A pointer argument was null.
    NullPointer = 1,
    /// A parameter failed validation.
    InvalidParameter = 2,
    /// The configuration is degenerate (e.g. an exactly dark port).
    DegenerateConfiguration = 3,
    /// The requested value is outside the achievable range.
    NoSolution = 4,
    /// A mode overlap magnitude exceeded 1.
    InvalidOverlap = 5,
    /// A numerical grid could not resolve the modes.
    GridResolution = 6,
    /// An I/O or internal failure.
    Internal = 7,
}

impl From<&WvaError> for WvaStatus {
    fn from(err: &WvaError) -> Self {
        match err {
            WvaError::InvalidParameter(_) => WvaStatus::InvalidParameter,
            WvaError::DegenerateConfiguration(_) => WvaStatus::DegenerateConfiguration,
            WvaError::NoSolution { .. } => WvaStatus::NoSolution,
            WvaError::InvalidOverlap(_) => WvaStatus::InvalidOverlap,
            WvaError::GridResolution(_) => WvaStatus::GridResolution,
            WvaError::Io(_) => WvaStatus::Internal,
        }
    }
}

/// Output-port selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WvaPort {
    U = 0,
    V = 1,
}

impl From<WvaPort> for Port {
    fn from(port: WvaPort) -> Self {
        match port {
            WvaPort::U => Port::U,
            WvaPort::V => Port::V,
        }
    }
}

/// Opaque interferometer configuration handle.
pub struct WvaScheme {
    cfg: SchemeConfig,
}

/// Static description of a status code; never null, does not need freeing.
#[no_mangle]
pub extern "C" fn wva_status_message(status: WvaStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        WvaStatus::Ok => b"ok\0",
        WvaStatus::NullPointer => b"null pointer argument\0",
        WvaStatus::InvalidParameter => b"invalid parameter\0",
        WvaStatus::DegenerateConfiguration => b"degenerate configuration\0",
        WvaStatus::NoSolution => b"no solution in achievable range\0",
        WvaStatus::InvalidOverlap => b"mode overlap magnitude exceeds 1\0",
        WvaStatus::GridResolution => b"grid too coarse\0",
        WvaStatus::Internal => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}

fn write_out<T>(out: *mut T, value: T) -> WvaStatus {
    if out.is_null() {
        return WvaStatus::NullPointer;
    }
    // SAFETY: the pointer was checked non-null; the caller guarantees it is
    // valid for writes of T per the FFI contract.
    unsafe { out.write(value) };
    WvaStatus::Ok
}

macro_rules! ffi_try {
    ($expr:expr) => {
        match $expr {
            Ok(value) => value,
            Err(err) => return WvaStatus::from(&err),
        }
    };
}

/// Creates a configuration handle. On success writes a handle that must be
/// freed with `wva_scheme_free`.
///
/// # Safety
/// `out_scheme` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn wva_scheme_new(
    lambda0_m: f64,
    t0_s: f64,
    tau0_s: f64,
    tau_s: f64,
    theta_rad: f64,
    n_photons: f64,
    out_scheme: *mut *mut WvaScheme,
) -> WvaStatus {
    if out_scheme.is_null() {
        return WvaStatus::NullPointer;
    }
    let pulse = ffi_try!(PulseParams::new(lambda0_m, t0_s));
    let cfg = ffi_try!(SchemeConfig::new(pulse, tau0_s, tau_s, theta_rad, n_photons));
    let handle = Box::into_raw(Box::new(WvaScheme { cfg }));
    write_out(out_scheme, handle)
}

/// Releases a handle created by `wva_scheme_new`. Null is a no-op.
///
/// # Safety
/// `scheme` must be null or a handle returned by `wva_scheme_new` that has
/// not already been freed.
#[no_mangle]
pub unsafe extern "C" fn wva_scheme_free(scheme: *mut WvaScheme) {
    if !scheme.is_null() {
        drop(Box::from_raw(scheme));
    }
}

unsafe fn deref<'a>(scheme: *const WvaScheme) -> Option<&'a SchemeConfig> {
    scheme.as_ref().map(|s| &s.cfg)
}

/// Carrier angular frequency (rad/s) and rms bandwidth (rad/s) of the pulse.
///
/// # Safety
/// `scheme` must be a live handle; output pointers must be valid or null
/// (null outputs are rejected, not written).
#[no_mangle]
pub unsafe extern "C" fn wva_pulse_properties(
    scheme: *const WvaScheme,
    out_omega0: *mut f64,
    out_bandwidth: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let status = write_out(out_omega0, cfg.pulse.omega0());
    if status != WvaStatus::Ok {
        return status;
    }
    write_out(out_bandwidth, cfg.pulse.bandwidth())
}

/// Fraction of input power surviving post-selection into `port`, plus the
/// same quantity in dB.
///
/// # Safety
/// `scheme` must be a live handle; output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn wva_port_transmission(
    scheme: *const WvaScheme,
    port: WvaPort,
    out_fraction: *mut f64,
    out_loss_db: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let t = wva::port_transmission(cfg, port.into());
    let status = write_out(out_fraction, t.fraction);
    if status != WvaStatus::Ok {
        return status;
    }
    write_out(out_loss_db, t.loss_db)
}

/// Spectrum centroid shift of the û port (Hz).
///
/// # Safety
/// `scheme` must be a live handle; `out_shift_hz` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wva_centroid_shift(
    scheme: *const WvaScheme,
    out_shift_hz: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let shift = ffi_try!(wva::centroid_shift(cfg));
    write_out(out_shift_hz, shift)
}

/// Exact τ-derivative of the centroid shift (Hz/s).
///
/// # Safety
/// `scheme` must be a live handle; `out_derivative` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wva_centroid_derivative(
    scheme: *const WvaScheme,
    out_derivative: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let d = ffi_try!(wva::centroid_derivative(cfg));
    write_out(out_derivative, d)
}

/// Magnitude of the closed-form port mode overlap between delays τ₀ and
/// τ₀ + τ.
///
/// # Safety
/// `scheme` must be a live handle; `out_rho_abs` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wva_mode_overlap_abs(
    scheme: *const WvaScheme,
    port: WvaPort,
    out_rho_abs: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let rho = ffi_try!(wva::mode_overlap_closed(cfg, port.into()));
    write_out(out_rho_abs, rho.rho.norm().min(1.0))
}

/// Squared overlap of the delayed and undelayed states, with its exponent
/// (overlap_sq = exp(−exponent); the exponent stays finite when overlap_sq
/// underflows).
///
/// # Safety
/// `scheme` must be a live handle; output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn wva_state_overlap(
    scheme: *const WvaScheme,
    out_overlap_sq: *mut f64,
    out_exponent: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let report = wva::input_state_overlap(cfg);
    let status = write_out(out_overlap_sq, report.overlap_sq);
    if status != WvaStatus::Ok {
        return status;
    }
    write_out(out_exponent, report.exponent)
}

/// Minimum error probability for discriminating two pure states with squared
/// overlap `overlap_sq`.
#[no_mangle]
pub extern "C" fn wva_helstrom_error(overlap_sq: f64, out_p_error: *mut f64) -> WvaStatus {
    let p = ffi_try!(wva::helstrom_error(overlap_sq));
    write_out(out_p_error, p)
}

/// Cramér-Rao bound on delay estimation: variance (s²) and rms (s).
///
/// # Safety
/// `scheme` must be a live handle; output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn wva_cramer_rao_bound(
    scheme: *const WvaScheme,
    out_variance: *mut f64,
    out_rms: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let bound = ffi_try!(wva::cramer_rao_bound(&cfg.pulse, cfg.n_in));
    let status = write_out(out_variance, bound.variance);
    if status != WvaStatus::Ok {
        return status;
    }
    write_out(out_rms, bound.rms)
}

/// Fisher-information enhancement ratio (1 + γ)/(1 − γ) between the two
/// resonance endpoints.
///
/// # Safety
/// `scheme` must be a live handle; `out_ratio` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wva_fisher_enhancement_ratio(
    scheme: *const WvaScheme,
    out_ratio: *mut f64,
) -> WvaStatus {
    let Some(cfg) = deref(scheme) else {
        return WvaStatus::NullPointer;
    };
    let report = ffi_try!(wva::fisher_endpoints(&cfg.pulse, cfg.tau, 1.0, 1.0));
    write_out(out_ratio, report.enhancement_ratio)
}

/// Effective mode overlap seen by a resolution-limited detection system:
/// ρ_eff = 1 − (1 − ρ)·exp[−(ρ/a)ⁿ].
#[no_mangle]
pub extern "C" fn wva_effective_overlap(
    rho_abs: f64,
    floor_a: f64,
    floor_n: u32,
    out_rho_eff: *mut f64,
) -> WvaStatus {
    let eff = ffi_try!(wva::effective_overlap(rho_abs, floor_a, floor_n));
    write_out(out_rho_eff, eff)
}
