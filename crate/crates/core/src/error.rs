use thiserror::Error;

/// Errors raised by the workbench.
///
/// The variants split into two families: malformed input (shapes, ranges,
/// file contents) and mathematical failures (a combination that does not
/// converge, a degree cap that is too small). [`Error::is_mathematical`]
/// tells them apart so front ends can map them to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: String, reason: String },

    #[error("zero vector where a nonzero vector is required ({0})")]
    ZeroVector(String),

    #[error("generators are linearly dependent over Q(t)")]
    DependentGenerators,

    #[error("combination does not converge: entry {index} has t-valuation {valuation}")]
    NegativeValuation { index: usize, valuation: i64 },

    #[error("degree cap insufficient: truncated quotient has length {length}, expected at most {expected}")]
    CapInsufficient { length: usize, expected: usize },

    #[error("limit scheme has length {length}, expected {expected}")]
    LengthMismatch { length: usize, expected: usize },

    #[error("parse error at `{field}`: {reason}")]
    Parse { field: String, reason: String },
}

impl Error {
    pub(crate) fn arg(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name: name.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn dims(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected,
            found,
        }
    }

    /// True for failures of the mathematics rather than of the input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::DependentGenerators
                | Error::NegativeValuation { .. }
                | Error::CapInsufficient { .. }
                | Error::LengthMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
