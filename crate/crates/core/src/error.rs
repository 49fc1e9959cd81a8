use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants map one-to-one onto the CLI exit codes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("failed to parse `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("the linear fractional transform has an identically zero denominator")]
    DegenerateParameter,

    #[error("parameter is not admissible: {0}")]
    Inadmissible(String),

    #[error("moment s_{index} is required but not available")]
    InsufficientMoments { index: i64 },

    #[error("sequence has no normal index in the available window")]
    NoNormalIndex,

    #[error("rule not applicable: {0}")]
    NotApplicable(String),

    #[error("sequence is not in basic form: {0}")]
    NotBasicForm(String),

    #[error("series with zero leading coefficient is not invertible")]
    NonInvertible,

    #[error("leading coefficient vanishes; a polynomial l-step is required")]
    RequiresPolynomialL,

    #[error("sequence is not regular at normal index {index}")]
    NotRegular { index: usize },

    #[error("{order} is not a normal index (singular Hankel block)")]
    NotNormalIndex { order: usize },

    #[error("degenerate problem: ell = {ell} but the largest normal index {top} needs ell = {expected}")]
    Degenerate { ell: usize, top: usize, expected: usize },

    #[error("coefficient of z^{power} lies below the expansion cutoff z^{cutoff}")]
    BeyondCutoff { power: i64, cutoff: i64 },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::MalformedInput(_) => 2,
            Error::NotRegular { .. } | Error::Degenerate { .. } => 3,
            Error::InsufficientMoments { .. } => 4,
            Error::NoNormalIndex => 5,
            Error::Inadmissible(_) | Error::DegenerateParameter => 6,
            _ => 7,
        }
    }

    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedInput(_) => "malformed-input",
            Error::Parse { .. } => "parse",
            Error::DegenerateParameter => "degenerate-parameter",
            Error::Inadmissible(_) => "inadmissible-parameter",
            Error::InsufficientMoments { .. } => "insufficient-moments",
            Error::NoNormalIndex => "no-normal-index",
            Error::NotApplicable(_) => "not-applicable",
            Error::NotBasicForm(_) => "not-basic-form",
            Error::NonInvertible => "non-invertible",
            Error::RequiresPolynomialL => "requires-polynomial-l",
            Error::NotRegular { .. } => "not-regular",
            Error::NotNormalIndex { .. } => "not-normal-index",
            Error::Degenerate { .. } => "degenerate",
            Error::BeyondCutoff { .. } => "beyond-cutoff",
            Error::Consistency(_) => "internal-consistency",
        }
    }
}

macro_rules! ensure_consistent {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Consistency(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure_consistent;
