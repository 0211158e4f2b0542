use thiserror::Error;

/// Errors raised by the polynomial, ideal and singularity layers.
///
/// Every mathematical refusal is typed so that callers (and the CLI exit
/// codes) can tell a usage mistake from a hypothesis that does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("undeclared identifier `{name}` at position {pos}")]
    UndeclaredIdentifier { name: String, pos: usize },

    #[error("exponent at position {pos} is not a non-negative integer literal")]
    BadExponent { pos: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("`{0}` is not a ring variable")]
    NotARingVariable(String),

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("the zero ideal has no generator presentation")]
    ZeroIdeal,

    #[error("nonzero constant term: the germ does not pass through the origin")]
    NotThroughOrigin,

    #[error("non-reduced input: repeated factor {witness}")]
    NonReduced { witness: String },

    #[error("singularity is not isolated at the origin")]
    NonIsolated,

    #[error("not a line singularity: {0}")]
    NotLineSingularity(String),

    #[error("intersection is not proper at the origin: {0}")]
    ImproperIntersection(String),

    #[error("dimension assertion failed: {0}")]
    DimensionAssertion(String),

    #[error("resource budget of {budget} reduction steps exceeded")]
    BudgetExceeded { budget: usize },

    #[error("specialization disagrees with the generic computation: {0}")]
    UnluckySpecialization(String),

    #[error("product formula result {0} is not a non-negative integer")]
    NonIntegerResult(String),

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SYNTAX",
            Error::UndeclaredIdentifier { .. } => "UNDECLARED_IDENTIFIER",
            Error::BadExponent { .. } => "BAD_EXPONENT",
            Error::ExponentOverflow => "EXPONENT_OVERFLOW",
            Error::InvalidRing(_) => "INVALID_RING",
            Error::ContextMismatch(_) => "CONTEXT_MISMATCH",
            Error::NotARingVariable(_) => "NOT_A_RING_VARIABLE",
            Error::ZeroInput(_) => "ZERO_INPUT",
            Error::ZeroIdeal => "ZERO_IDEAL",
            Error::NotThroughOrigin => "NOT_THROUGH_ORIGIN",
            Error::NonReduced { .. } => "NON_REDUCED",
            Error::NonIsolated => "NON_ISOLATED",
            Error::NotLineSingularity(_) => "NOT_LINE_SINGULARITY",
            Error::ImproperIntersection(_) => "IMPROPER_INTERSECTION",
            Error::DimensionAssertion(_) => "DIMENSION_ASSERTION",
            Error::BudgetExceeded { .. } => "BUDGET_EXCEEDED",
            Error::UnluckySpecialization(_) => "UNLUCKY_SPECIALIZATION",
            Error::NonIntegerResult(_) => "NON_INTEGER_RESULT",
            Error::WeightMismatch(_) => "WEIGHT_MISMATCH",
            Error::InvalidFamily(_) => "INVALID_FAMILY",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::Internal(_) => "INTERNAL",
        }
    }

    /// Usage-level errors (bad input text, wrong names) as opposed to
    /// mathematical refusals.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UndeclaredIdentifier { .. }
                | Error::BadExponent { .. }
                | Error::InvalidRing(_)
                | Error::ContextMismatch(_)
                | Error::NotARingVariable(_)
                | Error::InvalidArgument(_)
        )
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }

    /// Refusals that mean "the input does not satisfy a hypothesis" rather
    /// than a resource or implementation failure.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NotThroughOrigin
                | Error::NonReduced { .. }
                | Error::NonIsolated
                | Error::NotLineSingularity(_)
                | Error::ImproperIntersection(_)
                | Error::DimensionAssertion(_)
                | Error::ZeroInput(_)
                | Error::ZeroIdeal
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
