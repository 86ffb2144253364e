use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // Graph text parsing.
    #[error("line {line}: malformed statement: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: edge multiplicity x0 is not allowed")]
    ZeroMultiplicity { line: usize },
    #[error("line {line}: unexpected token `{token}`")]
    UnknownToken { line: usize, token: String },
    #[error("line {line}: edge {source_vertex} -> {range} declared twice")]
    DuplicateEdge {
        line: usize,
        source_vertex: String,
        range: String,
    },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph has {vertices} vertices, bound is {bound}")]
    TooLarge { vertices: usize, bound: usize },
    #[error("vertex set is not hereditary and saturated")]
    NotHereditarySaturated,
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("vertex set is not a maximal tail")]
    NotATail,
    #[error("maximal tail has more than one exit-free generating loop")]
    NonUniqueGeneratingLoop,
    #[error("graph is not T1")]
    NotT1,
    #[error("graph does not satisfy condition (K)")]
    ConditionKRequired,
    #[error("graph C*-algebra is not purely infinite")]
    NotPurelyInfinite,
    #[error("graph is not row-finite")]
    NotRowFinite,
    #[error("invalid subset of the primitive ideal space: {0}")]
    InvalidSubset(String),
    #[error("complement of a finite non-empty circle subset is not representable")]
    UnrepresentableComplement,
    #[error("invalid fixture spec: {0}")]
    InvalidSpec(String),
    #[error("internal postcondition failed: {0}")]
    Postcondition(String),
}

impl Error {
    /// True for errors raised while reading input text.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedLine { .. }
                | Error::ZeroMultiplicity { .. }
                | Error::UnknownToken { .. }
                | Error::DuplicateEdge { .. }
        )
    }
}
