use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by lattice construction and the algorithms on top of it.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("cover pair ({0}, {1}) is transitively redundant")]
    NotTransitivelyReduced(String, String),
    #[error("elements {0} and {1} have no greatest common lower bound")]
    MeetUndefined(String, String),
    #[error("elements {0} and {1} have no least common upper bound")]
    JoinUndefined(String, String),
    #[error("poset has no global bottom/top")]
    NoBoundsError,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(String, String),
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("vector length {got} does not match ambient dimension {expect}")]
    DimensionMismatch { expect: usize, got: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,

    #[error("element set is not closed under meet and join")]
    NotASublattice,

    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("index {0} is out of range")]
    IndexOutOfRange(usize),

    #[error("element {0} is not an atom")]
    NotAnAtom(String),
    #[error("replacement lattice for atom {0} must have at least 2 elements")]
    UnboundedReplacement(String),
    #[error("{0}")]
    TooSmall(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("evaluation budget exceeded: {0} evaluations needed")]
    BudgetExceeded(u128),

    #[error("only {found} of {wanted} requested lattices exist within the size bound")]
    NotEnoughFound { wanted: usize, found: usize },

    #[error("malformed lattice document: {0}")]
    Format(String),
}
