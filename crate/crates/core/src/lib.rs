//! Temporal-delay estimation in a two-port interferometer with pre- and
//! post-selection, analyzed with quantum estimation theory.
//!
//! The crate models a Gaussian pulse split across two polarisation modes, one
//! delayed by τ, recombined and projected onto a post-selection angle θ. It
//! provides:
//!
//! - the pulse model and the γ delay-overlap factor ([`pulse`]),
//! - output-port spectra, transmissions and the amplified spectrum centroid
//!   shift ([`scheme`]),
//! - mode and coherent-state overlaps, closed-form and by quadrature
//!   ([`overlap`]),
//! - discrimination and estimation bounds: minimum error probability,
//!   Cramér-Rao bound, Fisher information and the post-selection enhancement
//!   ratio ([`estimation`]),
//! - technical-noise detector models: photon-budget saturation and a
//!   resolution floor on the mode overlap ([`detector`]),
//! - independent numerical oracles for testing ([`oracle`]),
//! - a CLI front end emitting deterministic CSV/JSON ([`cli`]).
//!
//! All internal quantities are strict SI (seconds, Hz, rad/s, meters); the
//! CLI converts from friendlier units at the boundary.

// Parameter checks are written as `!(x > 0.0)` on purpose: the negation
// rejects NaN along with the out-of-range values, which `x <= 0.0` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod detector;
pub mod error;
pub mod estimation;
pub mod oracle;
pub mod overlap;
pub mod pulse;
pub mod report;
pub mod scheme;

pub use detector::{
    effective_overlap, resolution_limited_error, saturated_overlap, solve_projection_for_budget,
    DetectorLimits,
};
pub use error::{Result, WvaError};
pub use estimation::{
    cramer_rao_bound, endpoint_angles, error_vs_photons, fisher_endpoints, fisher_information,
    fisher_report, helstrom_error, CramerRaoBound, FisherReport,
};
pub use oracle::FrequencyGrid;
pub use overlap::{
    coherent_overlap, input_state_overlap, mode_overlap_closed, mode_overlap_quadrature,
    output_state_overlap, ModeOverlap, StateOverlapReport,
};
pub use pulse::{DelayOverlap, PulseParams, SPEED_OF_LIGHT};
pub use report::{distinguishability_report, DistinguishabilityReport};
pub use scheme::{
    centroid_derivative, centroid_shift, differential_power, port_transmission, Port,
    PortTransmission, SchemeConfig,
};
