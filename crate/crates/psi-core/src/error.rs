//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors reported by parsing, arithmetic preconditions, and the decision
/// procedures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error while parsing a polynomial, permutation, or ideal spec.
    Parse { position: usize, message: String },
    /// A variable index exceeded the declared number of variables.
    VarIndexOutOfRange { index: usize, vars: usize },
    /// Two operands live in polynomial rings with different variable counts.
    DimensionMismatch { left: usize, right: usize },
    /// An operation required a specific variable count (e.g. bivariate gcd).
    WrongVariableCount { expected: usize, found: usize },
    /// A homogeneous input of a specific degree was required.
    DegreeMismatch { expected: usize, found: usize },
    /// The input polynomial was not homogeneous.
    NotHomogeneous,
    /// The zero polynomial is not accepted here.
    ZeroPolynomial,
    /// Full `S_d` enumeration was requested for `d` above the configured cap.
    OrbitCapExceeded { d: usize, cap: usize },
    /// The ideal is not generated in a single degree.
    NotSingleDegree,
    /// A theorem-backed operation refused a coefficient field whose
    /// characteristic violates the theorem's hypotheses.
    UnsupportedCharacteristic {
        required: &'static str,
        found: u64,
    },
    /// Catch-all for invalid arguments (k = 0 powers, ell > k, ...).
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::VarIndexOutOfRange { index, vars } => {
                write!(f, "variable index x{index} out of range (d = {vars})")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "variable-count mismatch: {left} vs {right}")
            }
            Error::WrongVariableCount { expected, found } => {
                write!(f, "operation requires d = {expected}, got d = {found}")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "expected homogeneous degree {expected}, found {found}")
            }
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed"),
            Error::OrbitCapExceeded { d, cap } => {
                write!(f, "S_{d} enumeration exceeds the configured cap (d <= {cap})")
            }
            Error::NotSingleDegree => {
                write!(f, "ideal is not generated in a single degree")
            }
            Error::UnsupportedCharacteristic { required, found } => {
                write!(
                    f,
                    "field characteristic {found} not supported: this operation requires {required}"
                )
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
