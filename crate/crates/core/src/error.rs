use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u32 },
    #[error("code length must be at least 1")]
    EmptyLength,
    #[error("vector of length {found} does not fit a code of length {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vector over Z_{found} mixed with code over Z_{expected}")]
    ModulusMismatch { expected: u32, found: u32 },
    #[error("enumeration needs {needed} candidates but the budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("polynomial degrees differ ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },
    #[error("{0} is not a supported prime power field order")]
    NotPrimePower(u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("Hamming weight is not a valid kind for this query")]
    HammingNotAllowed,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
