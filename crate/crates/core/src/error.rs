use core::fmt;

/// Errors raised by ideal operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two objects live in rings with different numbers of variables.
    DimensionMismatch {
        /// Variable count of the receiver.
        expected: usize,
        /// Variable count that was supplied.
        found: usize,
    },
    /// A variable index is not below the variable count.
    IndexOutOfRange {
        /// Offending index (0-based).
        index: usize,
        /// Variable count.
        nvars: usize,
    },
    /// More variables than the library supports.
    TooManyVariables {
        /// Requested variable count.
        nvars: usize,
        /// Supported maximum.
        max: usize,
    },
    /// The operation needs a nonzero ideal.
    ZeroIdeal,
    /// The operation needs a proper ideal.
    UnitIdeal,
    /// The operation needs an ideal generated in a single degree.
    NotEquigenerated,
    /// An exponent would exceed the configured cap.
    ExponentOverflow {
        /// The cap that was hit.
        cap: u32,
    },
    /// `power(I, 0)` was requested.
    ZeroPower,
    /// A degree argument of zero where a positive degree is required.
    ZeroDegree,
    /// Veronese bounds admit no monomial of the requested degree.
    InfeasibleBounds {
        /// Requested degree.
        degree: u32,
        /// Sum of the bounds.
        total: u64,
    },
    /// The field characteristic is not a prime below `2^31`.
    NotPrime(u32),
    /// A size limit was exceeded.
    CapExceeded {
        /// What was being limited.
        what: &'static str,
        /// The limit.
        limit: usize,
        /// The size that was requested.
        actual: usize,
    },
    /// An empty list of primes was given where at least one is needed.
    EmptyPrimeList,
    /// A malformed intersection presentation.
    InvalidPresentation(&'static str),
}

/// Shorthand result type.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} variables, found {found}")
            }
            Error::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range for {nvars} variables")
            }
            Error::TooManyVariables { nvars, max } => {
                write!(f, "{nvars} variables requested, at most {max} supported")
            }
            Error::ZeroIdeal => f.write_str("operation undefined for the zero ideal"),
            Error::UnitIdeal => f.write_str("operation undefined for the unit ideal"),
            Error::NotEquigenerated => f.write_str("ideal is not generated in a single degree"),
            Error::ExponentOverflow { cap } => write!(f, "exponent exceeds cap {cap}"),
            Error::ZeroPower => f.write_str("power exponent must be at least 1"),
            Error::ZeroDegree => f.write_str("degree must be at least 1"),
            Error::InfeasibleBounds { degree, total } => {
                write!(f, "no monomial of degree {degree} fits bounds summing to {total}")
            }
            Error::NotPrime(p) => write!(f, "field characteristic {p} is not a supported prime"),
            Error::CapExceeded { what, limit, actual } => {
                write!(f, "{what}: {actual} exceeds limit {limit}")
            }
            Error::EmptyPrimeList => f.write_str("at least one prime is required"),
            Error::InvalidPresentation(why) => write!(f, "invalid presentation: {why}"),
        }
    }
}

impl core::error::Error for Error {}
