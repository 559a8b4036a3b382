use thiserror::Error;

/// Errors raised by the algebraic kernels and the predicates built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different ambient fields")]
    AmbientMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operands belong to different kernels")]
    KernelMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("polynomial is not monic of the declared degree")]
    NotMonic,
    #[error("minimal polynomial is reducible over the base field")]
    Reducible,
    #[error("extension degree {0} is not supported (1 to 4 only)")]
    UnsupportedDegree(usize),
    #[error("structure table does not define a field: {0}")]
    NotAField(String),
    #[error("integer too large for exact search: {0}")]
    CoefficientTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("colon by zero module")]
    ColonByZero,
    #[error("inexact colon: window did not stabilize")]
    InexactColon,
    #[error("infinite subspace lattice; supply candidates")]
    InfiniteLattice,
    #[error("profile is not a ring: {0}")]
    NotARing(String),
    #[error("not a module over the ring: {0}")]
    NotAModule(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("ring of size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("ring is not an idealization")]
    NotIdealization,
    #[error("modules differ")]
    ModuleMismatch,
    #[error("operation not supported by this kernel: {0}")]
    Unsupported(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
