//! Gap extraction: largest and smallest spacing of a sample set augmented
//! with the interval endpoints `{0, 1}`.
//!
//! Three routes are provided:
//!
//! * [`gaps_oracle`] — sort-based reference, `O(n log n)`;
//! * [`max_gap_gonzalez`] — pigeonhole binning, worst-case `O(n)` time and
//!   space, no sorting; parallelizable through [`BucketSummary`] merges;
//! * [`min_gap_rabin`] — randomized incremental closest-pair grid,
//!   expected `O(n)`; the result value is deterministic, only the running
//!   time depends on the injected randomness.
//!
//! All three agree exactly (same arithmetic, no tolerance) on every input.

mod bucket;
mod rabin;

pub use bucket::{bucket_summary_for, max_gap_gonzalez, merge_bucket_summaries, BucketSummary};
pub use rabin::min_gap_rabin;

use crate::sample::SampleSet;
use crate::Real;

/// Max- and min-gap of the augmented multiset `{0,1} ∪ values`, with the
/// witness endpoint pairs that realize them.
#[derive(Debug, Clone, PartialEq)]
pub struct GapSummary<R: Real> {
    /// Number of gaps (`count + 1`).
    pub n_gaps: u64,
    pub max_gap: R,
    pub min_gap: R,
    /// Endpoints of a largest gap, left endpoint first.
    pub max_pair: (R, R),
    /// Endpoints of a smallest gap, left endpoint first.
    pub min_pair: (R, R),
}

/// One-sided gap result (max or min only).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapWitness<R: Real> {
    pub n_gaps: u64,
    pub value: R,
    /// Endpoints of the gap, left endpoint first.
    pub pair: (R, R),
}

/// Returns the augmented points `{0,1} ∪ values` (unsorted).
fn augmented<R: Real>(s: &SampleSet<R>) -> Vec<R> {
    let mut pts = Vec::with_capacity(s.count() + 2);
    pts.push(R::zero());
    pts.extend_from_slice(s.values());
    pts.push(R::one());
    pts
}

/// Sort-based reference extraction of both extreme gaps.
///
/// Ties break toward the smaller left endpoint.
pub fn gaps_oracle<R: Real>(s: &SampleSet<R>) -> GapSummary<R> {
    let mut pts = augmented(s);
    pts.sort_unstable_by(|a, b| a.partial_cmp(b).expect("validated samples are not NaN"));

    let mut max_gap = pts[1] - pts[0];
    let mut max_pair = (pts[0], pts[1]);
    let mut min_gap = max_gap;
    let mut min_pair = max_pair;
    for w in pts.windows(2).skip(1) {
        let gap = w[1] - w[0];
        if gap > max_gap {
            max_gap = gap;
            max_pair = (w[0], w[1]);
        }
        if gap < min_gap {
            min_gap = gap;
            min_pair = (w[0], w[1]);
        }
    }
    GapSummary {
        n_gaps: s.n_gaps(),
        max_gap,
        min_gap,
        max_pair,
        min_pair,
    }
}
