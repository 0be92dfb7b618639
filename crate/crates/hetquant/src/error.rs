//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain and parse errors for the analytic and simulation routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("input must be finite, got {0}")]
    NonFinite(f64),
    #[error("probability must lie in (0, 1), got {0}")]
    ProbabilityOutOfRange(f64),
    #[error("scale parameter must be positive and finite, got {0}")]
    InvalidScale(f64),
    #[error("sample must contain at least one law")]
    EmptySample,
    #[error("sample must contain at least {needed} laws, got {got}")]
    SampleTooSmall { needed: usize, got: usize },
    #[error("Bernoulli probability must lie in [0, 1], got {0}")]
    BernoulliOutOfRange(f64),
    #[error("count threshold {m} out of range for {n} variables")]
    CountOutOfRange { m: usize, n: usize },
    #[error("p*n must be at least 1 to index an order statistic, got {0}")]
    PercentileUndefined(f64),
    #[error("component index {k} out of range for sample of size {n}")]
    ComponentOutOfRange { k: usize, n: usize },
    #[error("interval half-width must be positive and finite, got {0}")]
    InvalidHalfWidth(f64),
    #[error("confidence parameter must be positive and finite, got {0}")]
    InvalidConfidence(f64),
    #[error("scale-family bound requires every law to share one base, found mixed bases")]
    MixedBaseLaws,
    #[error("percentile offset must lie in [0, 0.25], got {0}")]
    TauOutOfRange(f64),
    #[error("replicate count must be at least 1")]
    NoReplicates,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
