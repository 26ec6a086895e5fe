//! Error type shared by every module in the crate.
//!
//! Errors split into two families: input errors (bad syntax, mismatched
//! rings, invalid parameters) and mathematical refusals (singular input,
//! non-Artinian quotient, non-stabilizing Hilbert function). The CLI maps
//! the first family to exit code 2 and the second to exit code 1.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Syntax error while parsing a polynomial or template.
    /// `pos` is a byte offset into the input text.
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A variable index exceeds the ring's variable count.
    #[error("variable x{index} out of range at position {pos}: ring has variables x0..x{}", num_vars - 1)]
    VariableOutOfRange {
        index: usize,
        num_vars: usize,
        pos: usize,
    },

    /// Two polynomials from different rings were combined.
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    /// An operation required a homogeneous polynomial.
    #[error("polynomial is not homogeneous: term of weighted degree {found} alongside degree {expected}")]
    NonHomogeneous { expected: i64, found: i64 },

    /// An operation required a nonzero polynomial.
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    /// The requested coefficient modulus is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A rational coefficient has a denominator divisible by the prime.
    #[error("denominator {den} is not invertible modulo {prime}")]
    BadDenominator { den: String, prime: u64 },

    /// The hypersurface is singular: its Jacobian quotient is not Artinian.
    #[error(
        "singular input: dimension {dim1} at degree {deg1} and {dim2} at degree {deg2} (both should be 0)"
    )]
    SingularInput {
        deg1: i64,
        dim1: usize,
        deg2: i64,
        dim2: usize,
    },

    /// A degree scan hit its cap with dimensions still positive.
    #[error("quotient is not Artinian: graded dimension still positive at degree cap {cap}")]
    NotArtinian { cap: i64 },

    /// The Hilbert function of a singular fiber never became constant.
    #[error("hilbert function did not stabilize by degree {cap}: singular locus is not finite")]
    NoStabilization { cap: i64 },

    /// Generator degrees do not describe a complete intersection.
    #[error("not complete-intersection shape: {0}")]
    NonCiShape(String),

    /// Any other invalid argument.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors that represent a mathematical refusal on valid
    /// input, as opposed to malformed input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::SingularInput { .. } | Error::NotArtinian { .. } | Error::NoStabilization { .. }
        )
    }
}
