//! Error type shared by all modules.

use num_complex::Complex64;
use thiserror::Error;

/// Errors reported by the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected:?}, found {found:?} in {context}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
        context: &'static str,
    },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")]
    NotPositiveSemidefinite { eigenvalue: f64 },

    #[error("matrix contains non-finite entries after {context}")]
    NonFinite { context: &'static str },

    #[error("eigenvalue computation failed: {0}")]
    EigenFailure(String),

    #[error("singular value decomposition failed: {0}")]
    SvdFailure(String),

    #[error("dimension {n} exceeds the configured cap {cap}")]
    DimensionTooLarge { n: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid brick tag {0}: must be one of 0, 2, 3")]
    InvalidBrickTag(usize),

    #[error("no such potential exists: RA({class}) in dimension {n}")]
    NoSuchPotential { class: String, n: usize },

    #[error("probe pair RA({class}) at n = {n} is not covered by an impossibility claim")]
    ProbeNotCovered { class: String, n: usize },

    #[error("inadmissible enclosure parameters: {0}")]
    InadmissibleSpec(String),

    #[error("smallness assumption violated: {0}")]
    SmallnessViolated(String),

    #[error("z = {z} lies on a singular locus of the formula")]
    SingularPoint { z: Complex64 },

    #[error("z = {z} resonates with grid frequency xi = {xi} (|z^2 - m^2 - xi^2| = {gap:.3e})")]
    GridResonance { z: Complex64, xi: f64, gap: f64 },

    #[error("potential is not rigid enough for the factorized assembly (residual {residual:.3e})")]
    RigidityResidual { residual: f64 },

    #[error("scalar potential does not decay at the domain boundary (|v| = {boundary_value:.3e})")]
    BoundaryDecay { boundary_value: f64 },

    #[error("{0}")]
    Io(String),
}
