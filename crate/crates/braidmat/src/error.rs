use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape: {0}")]
    Shape(String),
    #[error("slot {slot} out of range for {strands} strands")]
    Slot { slot: usize, strands: usize },
    #[error("pole: spectral-parameter composition undefined at z={z}, z'={zprime}")]
    Pole { z: f64, zprime: f64 },
    #[error("trivial: n = 1 is already in reduced form")]
    Trivial,
    #[error("not gauge-equivalent: {0}")]
    NotGaugeEquivalent(String),
    #[error("too large: dimension {dim} exceeds guard {guard}")]
    TooLarge { dim: usize, guard: usize },
    #[error("letter {letter} invalid for {strands} strands")]
    Letter { letter: i64, strands: usize },
    #[error("non-invertible b: diagonal parameters sum to zero")]
    NonInvertibleB,
    #[error("singular shift: {0}")]
    SingularShift(String),
    #[error("label: {0}")]
    Label(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
