use thiserror::Error;

/// Errors surfaced by the library.
///
/// Degenerate configurations (exactly dark ports and the like) get their own
/// variant so that sweeps can skip them instead of propagating NaNs.
#[derive(Debug, Error)]
pub enum WvaError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    /// The budget solver was asked for a transmission outside what the
    /// interferometer can reach. Carries the achievable interval.
    #[error(
        "no solution: required transmission {required:.6e} outside achievable range \
         [{min:.6e}, {max:.6e}]"
    )]
    NoSolution { required: f64, min: f64, max: f64 },

    #[error("grid too coarse: {0}")]
    GridResolution(String),

    #[error("invalid mode overlap: |rho| = {0} exceeds 1")]
    InvalidOverlap(f64),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, WvaError>;
