use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Input problems (shape, schema, unknown identifiers) and domain failures
/// (a configuration that is well formed but violates a condition) are kept
/// apart so that callers can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element has {got} coordinates, group has {expected} cyclic factors")]
    Shape { expected: usize, got: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid cyclic pair: {0}")]
    InvalidPair(String),
    #[error("enumeration would exceed {limit} elements")]
    TooLarge { limit: u64 },
    #[error("class has {got} coefficients, lattice has rank {expected}")]
    SurfaceMismatch { expected: usize, got: usize },
    #[error("Riemann-Roch value is not an integer for {0}")]
    Parity(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("unknown {kind} `{id}`")]
    Unknown { kind: &'static str, id: String },
    #[error("incomplete input: {0}")]
    Incomplete(String),
    #[error("malformed input: {0}")]
    Input(String),
    #[error("no integral line bundle for character {character}: {class}")]
    NoSolution { character: String, class: String },
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("invalid local configuration: {0}")]
    InvalidConfig(String),
    #[error("configuration matches no table row: {0}")]
    ClassificationGap(String),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
    #[error("table regeneration mismatch: {0}")]
    Regeneration(String),
    #[error("semi-resolution did not terminate after {0} blow-ups")]
    IterationCap(usize),
}

impl Error {
    /// True for failures caused by malformed or unreadable input rather than
    /// by the mathematics of a well-formed configuration.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Shape { .. }
                | Error::InvalidGroup(_)
                | Error::InvalidPair(_)
                | Error::SurfaceMismatch { .. }
                | Error::Unknown { .. }
                | Error::Incomplete(_)
                | Error::Input(_)
                | Error::Unsupported(_)
        )
    }

    pub(crate) fn unknown(kind: &'static str, id: impl Into<String>) -> Self {
        Error::Unknown { kind, id: id.into() }
    }
}
