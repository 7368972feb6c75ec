use thiserror::Error;

/// Errors produced by the algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },

    #[error("unsupported field {field}: {why}")]
    UnsupportedField { field: String, why: String },

    #[error("invalid field descriptor: {0}")]
    BadDescriptor(String),

    #[error("polynomial {0} is not separable")]
    Inseparable(String),

    #[error("polynomial {0} is reducible")]
    Reducible(String),

    #[error("irreducibility of {0} could not be certified")]
    UncertifiedIrreducible(String),

    #[error("singular quadratic form: radical contains {0}")]
    SingularForm(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("Witt decomposition not certified: {0}")]
    Uncertified(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
