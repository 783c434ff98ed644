#ifndef WVA_H
#define WVA_H

/* Generated by cbindgen from the wva-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Output-port selector.
typedef enum WvaPort {
  WVA_PORT_U = 0,
  WVA_PORT_V = 1,
} WvaPort;

// Status code for every fallible FFI call.
typedef enum WvaStatus {
  WVA_STATUS_OK = 0,
  // A pointer argument was null.
  WVA_STATUS_NULL_POINTER = 1,
  // A parameter failed validation.
  WVA_STATUS_INVALID_PARAMETER = 2,
  // The configuration is degenerate (e.g. an exactly dark port).
  WVA_STATUS_DEGENERATE_CONFIGURATION = 3,
  // The requested value is outside the achievable range.
  WVA_STATUS_NO_SOLUTION = 4,
  // A mode overlap magnitude exceeded 1.
  WVA_STATUS_INVALID_OVERLAP = 5,
  // A numerical grid could not resolve the modes.
  WVA_STATUS_GRID_RESOLUTION = 6,
  // An I/O or internal failure.
  WVA_STATUS_INTERNAL = 7,
} WvaStatus;

// Opaque interferometer configuration handle.
typedef struct WvaScheme WvaScheme;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code; never null, does not need freeing.
const char *wva_status_message(enum WvaStatus status);

// Creates a configuration handle. On success writes a handle that must be
// freed with `wva_scheme_free`.
//
// # Safety
// `out_scheme` must be a valid pointer to writable memory.
enum WvaStatus wva_scheme_new(double lambda0_m,
                              double t0_s,
                              double tau0_s,
                              double tau_s,
                              double theta_rad,
                              double n_photons,
                              struct WvaScheme **out_scheme);

// Releases a handle created by `wva_scheme_new`. Null is a no-op.
//
// # Safety
// `scheme` must be null or a handle returned by `wva_scheme_new` that has
// not already been freed.
void wva_scheme_free(struct WvaScheme *scheme);

// Carrier angular frequency (rad/s) and rms bandwidth (rad/s) of the pulse.
//
// # Safety
// `scheme` must be a live handle; output pointers must be valid or null
// (null outputs are rejected, not written).
enum WvaStatus wva_pulse_properties(const struct WvaScheme *scheme,
                                    double *out_omega0,
                                    double *out_bandwidth);

// Fraction of input power surviving post-selection into `port`, plus the
// same quantity in dB.
//
// # Safety
// `scheme` must be a live handle; output pointers must be valid.
enum WvaStatus wva_port_transmission(const struct WvaScheme *scheme,
                                     enum WvaPort port,
                                     double *out_fraction,
                                     double *out_loss_db);

// Spectrum centroid shift of the û port (Hz).
//
// # Safety
// `scheme` must be a live handle; `out_shift_hz` must be valid.
enum WvaStatus wva_centroid_shift(const struct WvaScheme *scheme, double *out_shift_hz);

// Exact τ-derivative of the centroid shift (Hz/s).
//
// # Safety
// `scheme` must be a live handle; `out_derivative` must be valid.
enum WvaStatus wva_centroid_derivative(const struct WvaScheme *scheme, double *out_derivative);

// Magnitude of the closed-form port mode overlap between delays τ₀ and
// τ₀ + τ.
//
// # Safety
// `scheme` must be a live handle; `out_rho_abs` must be valid.
enum WvaStatus wva_mode_overlap_abs(const struct WvaScheme *scheme,
                                    enum WvaPort port,
                                    double *out_rho_abs);

// Squared overlap of the delayed and undelayed states, with its exponent
// (overlap_sq = exp(−exponent); the exponent stays finite when overlap_sq
// underflows).
//
// # Safety
// `scheme` must be a live handle; output pointers must be valid.
enum WvaStatus wva_state_overlap(const struct WvaScheme *scheme,
                                 double *out_overlap_sq,
                                 double *out_exponent);

// Minimum error probability for discriminating two pure states with squared
// overlap `overlap_sq`.
enum WvaStatus wva_helstrom_error(double overlap_sq, double *out_p_error);

// Cramér-Rao bound on delay estimation: variance (s²) and rms (s).
//
// # Safety
// `scheme` must be a live handle; output pointers must be valid.
enum WvaStatus wva_cramer_rao_bound(const struct WvaScheme *scheme,
                                    double *out_variance,
                                    double *out_rms);

// Fisher-information enhancement ratio (1 + γ)/(1 − γ) between the two
// resonance endpoints.
//
// # Safety
// `scheme` must be a live handle; `out_ratio` must be valid.
enum WvaStatus wva_fisher_enhancement_ratio(const struct WvaScheme *scheme, double *out_ratio);

// Effective mode overlap seen by a resolution-limited detection system:
// ρ_eff = 1 − (1 − ρ)·exp[−(ρ/a)ⁿ].
enum WvaStatus wva_effective_overlap(double rho_abs,
                                     double floor_a,
                                     uint32_t floor_n,
                                     double *out_rho_eff);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* WVA_H */
