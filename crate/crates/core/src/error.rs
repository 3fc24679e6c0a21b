use thiserror::Error;

/// Errors raised by the toolkit. Every variant is an input error from the
/// caller's point of view; the CLI maps all of them to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient size must be between 3 and {max}, got {got}")]
    InvalidAmbientSize { got: usize, max: usize },
    #[error("field characteristic must be 0 or a prime, got {0}")]
    InvalidCharacteristic(u32),
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("variable set must be non-empty")]
    EmptyVariableSet,
    #[error("the unit ideal has no associated simplicial complex")]
    UnitIdeal,
    #[error("the zero ideal is not supported here")]
    ZeroIdeal,
    #[error("localization sets overlap")]
    OverlappingSets,
    #[error("degree vector has a negative coordinate at index {0}")]
    NegativeCoordinate(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("simplicial complex is not pure")]
    NotPure,
    #[error("facet {0:?} gives the zero prime")]
    EmptyFacet(Vec<usize>),
    #[error("complex has no facets")]
    NoFacets,
    #[error("vector is not a {m}-cover of the complex")]
    NotACover { m: u32 },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
