use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system component {component}: {reason}")]
    InvalidComponent { component: String, reason: String },

    #[error("cannot parse root system spec {0:?}")]
    BadRootSystemSpec(String),

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("Weyl group of order {order} exceeds the enumeration cap {cap}")]
    EnumerationCap { order: u128, cap: u128 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid embedding parameter: {0}")]
    InvalidParameter(String),

    #[error("embedding {label} failed validation: {violations}")]
    InvalidEmbedding { label: String, violations: String },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("no characteristic-0 branching along {label}: {reason}")]
    NotBranchable { label: String, reason: String },

    #[error("B_x ∩ H not Borel: {0}")]
    NotBorel(String),

    #[error("divisor weight requested but no SPLIT_PJ conclusion was emitted")]
    NoSplitting,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
