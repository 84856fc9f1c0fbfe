use thiserror::Error;

/// Errors shared across the exact-arithmetic pipeline.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("perturbation vector is degenerate for this cone basis (zero pairing at index {0})")]
    DegenerateQ(usize),
    #[error("bounded search exhausted after {0} steps")]
    SearchExhausted(usize),
    #[error("interval refinement cap of {0} bits reached")]
    PrecisionCap(u32),
    #[error("transformed denominator form has a zero coefficient (index {0})")]
    NotDense(usize),
    #[error("series truncation {have} insufficient, need at least {need}")]
    InsufficientTruncation { have: u32, need: u32 },
    #[error("periodic Bernoulli B_1 at an integer is ambiguous without a perturbation sign")]
    AmbiguousB1,
    #[error("matrix rows below the first are not divisible by the smoothing prime")]
    NotSmoothable,
    #[error("integral scaling factor is divisible by the smoothing prime")]
    ScalingHitsEll,
    #[error("missing data for ray class `{0}`")]
    MissingClassData(String),
    #[error("pairing <x, tau_{0}> vanishes")]
    PoleHit(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
