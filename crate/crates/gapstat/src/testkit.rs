//! End-to-end hypothesis tests: statistic → p-value → decision.
//!
//! The chi-square binning deliberately uses one bin per observation
//! (expected count 1), matching the uniformity procedure this toolkit
//! implements rather than the classical "expected ≥ 5 per bin" guideline.

use serde::Serialize;

use crate::dist;
use crate::error::TestError;
use crate::gap;
use crate::rng::SplitMix64;
use crate::sample::SampleSet;

/// Which test produced an outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ChiSquare,
    MaxGap,
    MinGap,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ChiSquare, Method::MaxGap, Method::MinGap];

    pub fn name(self) -> &'static str {
        match self {
            Method::ChiSquare => "chi_square",
            Method::MaxGap => "max_gap",
            Method::MinGap => "min_gap",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Pass rule applied to the p-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sidedness {
    /// Pass iff `p ≥ α`.
    OneSided,
    /// Pass iff `α/2 ≤ p ≤ 1 − α/2`.
    TwoSided,
}

/// Significance level and sidedness of the decision rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignificanceConfig {
    pub alpha: f64,
    pub sidedness: Sidedness,
}

impl SignificanceConfig {
    pub fn new(alpha: f64, sidedness: Sidedness) -> Self {
        assert!(
            alpha > 0.0 && alpha < 1.0,
            "significance level must be in (0,1), got {alpha}"
        );
        Self { alpha, sidedness }
    }

    pub fn one_sided(alpha: f64) -> Self {
        Self::new(alpha, Sidedness::OneSided)
    }

    pub fn two_sided(alpha: f64) -> Self {
        Self::new(alpha, Sidedness::TwoSided)
    }
}

/// Which law converts a min-gap statistic into a p-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinGapLaw {
    /// Exact smallest-spacing law (default; boundary-sane).
    Exact,
    /// Paper-form Poisson-tail approximation, for reproduction studies.
    Paper,
}

/// Outcome of one test run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TestOutcome {
    pub method: Method,
    /// Chi-square value or gap length.
    pub statistic: f64,
    /// Gap count for the gap tests; degrees of freedom for chi-square.
    pub n_gaps_or_df: u64,
    pub p_one_sided: f64,
    /// `2·min(p, 1−p)`, clamped to `[0,1]`.
    pub p_two_sided: f64,
    pub passed: bool,
    /// Witness endpoints of the extreme gap (gap tests only).
    pub witness: Option<(f64, f64)>,
}

/// Decision rule: one-sided passes iff `p ≥ α`; two-sided passes iff
/// `α/2 ≤ p ≤ 1 − α/2`.
pub fn decide(p: f64, cfg: &SignificanceConfig) -> bool {
    match cfg.sidedness {
        Sidedness::OneSided => p >= cfg.alpha,
        Sidedness::TwoSided => p >= cfg.alpha / 2.0 && p <= 1.0 - cfg.alpha / 2.0,
    }
}

fn two_sided(p: f64) -> f64 {
    (2.0 * p.min(1.0 - p)).clamp(0.0, 1.0)
}

fn outcome(
    method: Method,
    statistic: f64,
    n_gaps_or_df: u64,
    p_one_sided: f64,
    witness: Option<(f64, f64)>,
    cfg: &SignificanceConfig,
) -> TestOutcome {
    TestOutcome {
        method,
        statistic,
        n_gaps_or_df,
        p_one_sided,
        p_two_sided: two_sided(p_one_sided),
        passed: decide(p_one_sided, cfg),
        witness,
    }
}

/// Chi-square uniformity test with one bin per observation.
///
/// Bins the `n` observations into `n` equal-width bins over `[0,1]`
/// (value 1.0 clamped into the last bin); the statistic is
/// `Σ (bᵢ − 1)²` and the reference distribution has `n − 1` degrees of
/// freedom.
pub fn chi_square_uniformity_test(
    s: &SampleSet<f64>,
    cfg: &SignificanceConfig,
) -> Result<TestOutcome, TestError> {
    let n = s.count();
    if n < 2 {
        return Err(TestError::TooFewSamples { count: n });
    }
    let mut bins = vec![0u64; n];
    for &v in s.values() {
        let idx = ((v * n as f64) as usize).min(n - 1);
        bins[idx] += 1;
    }
    let statistic: f64 = bins
        .iter()
        .map(|&b| {
            let d = b as f64 - 1.0;
            d * d
        })
        .sum();
    let df = n as u64 - 1;
    let p = dist::chi_square_sf(statistic, df);
    Ok(outcome(Method::ChiSquare, statistic, df, p, None, cfg))
}

/// Max-gap uniformity test: pigeonhole-binned largest spacing of
/// `{0,1} ∪ values`, with the Gumbel-form upper-tail p-value.
pub fn max_gap_test(s: &SampleSet<f64>, cfg: &SignificanceConfig) -> TestOutcome {
    let g = gap::max_gap_gonzalez(s);
    let p = dist::max_gap_p_value(g.value, g.n_gaps);
    outcome(Method::MaxGap, g.value, g.n_gaps, p, Some(g.pair), cfg)
}

/// Min-gap test: randomized-grid smallest spacing of `{0,1} ∪ values`.
///
/// Small p means a suspiciously small minimum spacing (replicated or
/// near-replicated data items). The law switch selects the operational
/// exact law or the paper-form approximation.
pub fn min_gap_test(s: &SampleSet<f64>, cfg: &SignificanceConfig, law: MinGapLaw) -> TestOutcome {
    // The statistic is deterministic in value; the internal seed only
    // affects the insertion order of the sieve.
    let mut rng = SplitMix64::new(0xD1B5_4A32_D192_ED03);
    let g = gap::min_gap_rabin(s, &mut rng);
    let p = match law {
        MinGapLaw::Exact => dist::min_gap_cdf_exact(g.value, g.n_gaps),
        MinGapLaw::Paper => dist::min_gap_cdf_paper(g.value, g.n_gaps),
    };
    outcome(Method::MinGap, g.value, g.n_gaps, p, Some(g.pair), cfg)
}
