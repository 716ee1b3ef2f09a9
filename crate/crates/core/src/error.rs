use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus k must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("modulus k must be even, got {0}")]
    OddModulus(u64),

    #[error("invalid part {base}^{multiplicity}: bases must be >= 1 and multiplicities >= 0")]
    InvalidPart { base: i64, multiplicity: i64 },

    #[error("cannot parse partition from {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("base-k expansion of multiplicity 0 is undefined")]
    ZeroMultiplicity,

    #[error("partition {partition} is not in {set} for k = {k}")]
    NotInDomain {
        partition: String,
        set: &'static str,
        k: u64,
    },

    #[error("marked partition ({partition}, {pivot}, {mark}) is invalid for k = {k}: {reason}")]
    InvalidMarked {
        partition: String,
        pivot: u64,
        mark: u64,
        k: u64,
        reason: &'static str,
    },

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term must be +1 or -1 to invert over the integers")]
    NonUnitConstant,
}
