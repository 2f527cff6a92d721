use thiserror::Error;

/// Sample validation failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SampleError {
    #[error("value at index {index} is outside [0,1]: {value}")]
    OutOfRange { index: usize, value: f64 },
    #[error("sample set is empty")]
    Empty,
}

/// Gap extraction failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GapError {
    #[error("bucket grids differ: {left} vs {right} buckets")]
    GridMismatch { left: usize, right: usize },
}

/// Distribution evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistError {
    #[error("exact max-gap CDF is limited to n <= {cutoff}, got n = {n}; use the asymptotic form")]
    CutoffExceeded { n: u64, cutoff: u64 },
}

/// Hypothesis test failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TestError {
    #[error("chi-square uniformity test needs at least 2 samples, got {count}")]
    TooFewSamples { count: usize },
}

/// Data generator failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DataGenError {
    #[error("exclusion band of width {width} does not fit in (0,1)")]
    BandTooWide { width: f64 },
    #[error("exclusion band ({lo}, {hi}) is not strictly inside (0,1)")]
    BandOutsideUnit { lo: f64, hi: f64 },
    #[error("regular generator needs 1 <= k <= n, got k = {k}, n = {n}")]
    BadStratumCount { k: u64, n: usize },
}
