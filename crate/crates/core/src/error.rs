use thiserror::Error;

/// Errors raised by the library.
///
/// Input validation errors (`EmptyInput`, `ZeroWeight`, `WellFormedness`,
/// `Range`, `Conjugation`, `Overlap`, `LengthMismatch`, `Parse`) describe bad
/// caller input. `Resource` means a configured enumeration cap was hit.
/// `Mismatch` and `Degree` report disagreements between computed and stored
/// data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need at least two weights, got {0}")]
    EmptyInput(usize),

    #[error("weight at index {index} is zero; weights must be positive")]
    ZeroWeight { index: usize },

    #[error("weights are not well-formed: dropping index {index} leaves hcf {hcf}")]
    WellFormedness { index: usize, hcf: u64 },

    #[error("residue {k} is outside [0, {d})")]
    Range { k: u64, d: u64 },

    #[error("{which} parameters are not stable under q -> 1 - q mod 1")]
    Conjugation { which: &'static str },

    #[error("alpha and beta parameters share the value {value}")]
    Overlap { value: String },

    #[error("alpha and beta parameter lists differ in length ({alphas} vs {betas})")]
    LengthMismatch { alphas: usize, betas: usize },

    #[error("parameter {value} is outside [0, 1)")]
    ParameterRange { value: String },

    #[error("resource limit of {limit} candidate visits exceeded")]
    Resource { limit: u64 },

    #[error("degree {degree} equals weight at index {index}: the general member is a linear cone")]
    LinearCone { index: usize, degree: u64 },

    #[error("operation needs dimension {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("monomial {monomial} has degree {found}, expected {expected}")]
    Degree {
        monomial: String,
        expected: i64,
        found: i64,
    },

    #[error("row {row}, column {column}: expected {expected}, computed {found}")]
    Mismatch {
        row: usize,
        column: String,
        expected: String,
        found: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput(_) => "EmptyInput",
            Error::ZeroWeight { .. } => "ZeroWeight",
            Error::WellFormedness { .. } => "WellFormednessError",
            Error::Range { .. } => "RangeError",
            Error::Conjugation { .. } => "ConjugationError",
            Error::Overlap { .. } => "OverlapError",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::ParameterRange { .. } => "ParameterRange",
            Error::Resource { .. } => "ResourceError",
            Error::LinearCone { .. } => "LinearConeNotice",
            Error::Dimension { .. } => "DimensionError",
            Error::Degree { .. } => "DegreeError",
            Error::Mismatch { .. } => "MismatchError",
            Error::Parse(_) => "ParseError",
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
