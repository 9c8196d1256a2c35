use thiserror::Error;

/// Failures raised by arithmetic, calculus and the application modules.
///
/// Domain problems are always reported; no operation returns a NaN sentinel
/// for an argument outside its generator's domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {value} has no preimage under generator `{generator}`")]
    OutOfRange { generator: String, value: f64 },

    #[error("value {value} lies outside the domain of `{context}`")]
    DomainViolation { context: String, value: f64 },

    #[error("division by the zero element of `{generator}`")]
    DivisionByZero { generator: String },

    #[error("non-finite result in {0}")]
    NonFinite(String),

    #[error("quadrature did not reach tolerance {tol:e} within {panels} panels")]
    QuadratureFailure { tol: f64, panels: usize },

    #[error("overflow evaluating {0}")]
    Overflow(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("weights sum to {sum}, expected 1")]
    NormalizationError { sum: f64 },

    #[error("escort value {value} at p = {p} leaves [0, 1]")]
    RangeViolation { p: f64, value: f64 },

    #[error("integrator produced a non-finite state at step {step}")]
    StepFailure { step: usize },

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(context: impl Into<String>, value: f64) -> Self {
        Error::DomainViolation {
            context: context.into(),
            value,
        }
    }

    pub(crate) fn out_of_range(generator: impl Into<String>, value: f64) -> Self {
        Error::OutOfRange {
            generator: generator.into(),
            value,
        }
    }
}
