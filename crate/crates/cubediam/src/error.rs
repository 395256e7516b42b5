use crate::cube::MetricName;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cube size {0} is not supported (2 through 5)")]
    UnsupportedSize(u8),

    #[error("metric {name} is not defined for n={n}")]
    UndefinedMetric { name: MetricName, n: u8 },

    #[error("generator built for n={expected} applied to a cube of size {got}")]
    SizeMismatch { expected: u8, got: u8 },

    #[error("{0}")]
    ParseGenerator(String),

    #[error("state space of about {states:.3e} states exceeds the enumeration budget of {budget}")]
    BudgetExceeded { states: f64, budget: u64 },

    #[error("index {value} out of range (must be below {max})")]
    IndexOutOfRange { value: u64, max: u64 },

    #[error("invalid corner state: {0}")]
    InvalidCornerState(String),

    #[error("level {level} is not available in the census report")]
    LevelUnavailable { level: usize },

    #[error("estimate did not cross the covering threshold within {steps} steps")]
    DivergenceGuard { steps: u32 },

    #[error("{0}")]
    InvalidInput(String),
}
