use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("vertex index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("variable x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("element length {length} does not match polynomial degree {degree}")]
    LengthMismatch { length: usize, degree: usize },

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("group has more than {cap} elements")]
    ResourceCap { cap: usize },

    #[error("center is only defined for a single simple component")]
    SemisimpleCenter,

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("invalid removal set: {0}")]
    InvalidRemoval(String),

    /// Exact division by a simple root left a remainder; the Cartan data is
    /// inconsistent with the reflection it was built from.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
