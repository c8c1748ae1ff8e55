use thiserror::Error;

/// Errors shared across the library.
///
/// Every fallible operation reports through this enum so that callers (CLI,
/// FFI, claim sweeps) can classify failures without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational could not be reduced modulo p^k because p divides its
    /// reduced denominator.
    #[error("denominator {denom} is not invertible modulo {prime}^{power}")]
    DenominatorNotInvertible {
        denom: String,
        prime: u64,
        power: u32,
    },

    /// Polynomial inversion was requested against a modulus that shares a
    /// nonconstant factor with the operand.
    #[error("polynomials are not coprime; gcd has degree {gcd_degree}")]
    NotCoprime { gcd_degree: usize },

    /// An index fell outside the mathematically valid range of the operation
    /// (e.g. an odd Bernoulli index where an even one is required).
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A p-adic precision beyond what the implemented congruences support.
    #[error("precision {requested} unsupported (maximum {max})")]
    PrecisionUnsupported { requested: u32, max: u32 },

    /// A configured size cap would be exceeded.
    #[error("cap exceeded: {what} = {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    /// A precondition of a formula was violated (wrong parity, prime too
    /// small for the stated range, and so on).
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// The requested method name is not one this operation provides.
    #[error("method not supported here: {0}")]
    MethodUnsupported(String),

    /// Hensel lifting was asked to start from a non-root or from a point
    /// where the derivative is not a unit.
    #[error("residue {residue} mod {prime} is not a simple root")]
    NonUnit { residue: u64, prime: u64 },

    /// A squarefree integer was required.
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    /// A scan limit was larger than the configured enumeration range.
    #[error("range exceeded: {what} = {value} > {limit}")]
    RangeExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    /// Factorization gave up (cofactor above the configured cap).
    #[error("factorization failed for {0}")]
    FactorizationFailed(u64),

    /// No claim with the given identifier is registered.
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),

    /// Residues from different moduli were combined.
    #[error("mixed moduli: {left} vs {right}")]
    MixedModuli { left: String, right: String },

    /// Modulus too large for the fixed-width residue arithmetic.
    #[error("modulus {prime}^{power} does not fit in 63 bits")]
    ModulusTooLarge { prime: u64, power: u32 },

    /// I/O error while reading or writing the Bernoulli cache.
    #[error("cache i/o: {0}")]
    CacheIo(String),

    /// Cache file contents did not parse.
    #[error("cache parse error at line {line}: {reason}")]
    CacheParse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
