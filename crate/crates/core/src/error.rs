use num_bigint::BigInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("denominator {den} is not invertible modulo {modulus}")]
    NonInvertibleDenominator { den: BigInt, modulus: BigInt },

    #[error("cannot combine residues modulo {left} and {right}")]
    ModulusMismatch { left: BigInt, right: BigInt },

    #[error("modulus must be greater than 1, got {0}")]
    InvalidModulus(BigInt),

    #[error("{what} must be even, got {value}")]
    OddArgument { what: &'static str, value: u64 },

    #[error("{what} is out of range: {value}")]
    OutOfRange { what: &'static str, value: u64 },

    #[error("factorization does not describe {0}")]
    FactorizationMismatch(u64),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(&'static str),

    #[error("base {base} is not coprime to {n}")]
    BaseNotCoprime { base: u64, n: u64 },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("invalid range [{from}, {to}]")]
    InvalidRange { from: u64, to: u64 },

    #[error("checkpoint rejected: {0}")]
    Checkpoint(&'static str),
}
