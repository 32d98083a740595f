use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("mixed-field arithmetic: {0} vs {1}")]
    MixedField(String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("characteristic {p} does not exceed n = {n}; the group algebra of S_n is not semisimple")]
    SemisimplicityViolation { p: u64, n: usize },

    #[error("sequence is not potentially centrally stable: {0}")]
    PotentialStabilityViolation(String),

    #[error("subspace is not closed under the group action")]
    InvalidSubrepresentation,

    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),

    #[error("boundary maps do not compose to zero at position {0}")]
    NotAComplex(usize),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
