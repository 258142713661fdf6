use thiserror::Error;

pub type Result<T> = std::result::Result<T, KernelError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("order relation is not antisymmetric: {0} and {1} are mutually below each other")]
    NotAPartialOrder(usize, usize),
    #[error("elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("a lattice needs at least two elements (got {0})")]
    Degenerate(usize),
    #[error("element index {index} out of range for carrier of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("{what}: size {size} exceeds limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("expected a {expected} table, got a {found} table")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("adjunction fails at ({0}, {1}, {2})")]
    AdjunctionFailure(usize, usize, usize),
    #[error("structure rejected: {0}")]
    InvalidStructure(String),
    #[error("filters {0} and {1} of the family are incomparable")]
    NotAChain(usize, usize),
    #[error("map is not surjective: point {0} of the codomain has no preimage")]
    NotSurjective(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("structures live over different lattices or grounds")]
    Mismatch,
}

impl KernelError {
    pub(crate) fn size_limit(what: &'static str, size: u128, limit: u128) -> Self {
        KernelError::SizeLimit { what, size, limit }
    }
}
