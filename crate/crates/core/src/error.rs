use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid pair (p, q) = ({p}, {q}): p + q must be at least 1")]
    InvalidPair { p: u32, q: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid character: exponent {exponent} modulo {modulus}")]
    InvalidCharacter { modulus: u32, exponent: u32 },

    #[error("invalid signed Young diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("signature mismatch: diagram has ({found_p}, {found_q}), expected ({p}, {q})")]
    SignatureMismatch {
        p: u32,
        q: u32,
        found_p: u32,
        found_q: u32,
    },

    #[error("diagram {0} is not Richardson (some row length carries both signs)")]
    NotRichardson(String),

    #[error("{m} does not divide every row length of {diagram}")]
    NotDivisible { m: u32, diagram: String },

    #[error("invalid stratum label: {0}")]
    InvalidLabel(String),

    #[error("invalid character sheaf label: {0}")]
    InvalidSheaf(String),

    #[error("non-generic sample: two random draws gave dimensions {first} and {second}")]
    NonGenericSample { first: u64, second: u64 },

    #[error("n_max = {n_max} is outside 1..={max}")]
    OutOfRange { n_max: u32, max: u32 },

    #[error("invalid record: {0}")]
    InvalidRecord(String),
}
