//! Linear-time max-gap by pigeonhole binning.
//!
//! With `M` augmented points dropped into `M − 1` equal-width buckets on
//! `[0, 1]`, the gaps between points of consecutive rank sum to 1, so the
//! largest gap is at least the bucket width. A gap confined to a single
//! half-open bucket is strictly shorter than the width, hence the largest
//! gap always spans bucket boundaries and is recovered from per-bucket
//! extrema alone — no sorting.
//!
//! The per-bucket state forms a commutative monoid under [`merge`], so the
//! construction pass can be split across any number of workers and reduced
//! in any order; only the final scan is sequential.
//!
//! [`merge`]: BucketSummary::merge

use crate::error::GapError;
use crate::sample::SampleSet;
use crate::{real, Real};

use super::GapWitness;

/// Extremes of the values that landed in one bucket.
///
/// Emptiness is encoded by the inverted sentinels `lo = +∞, hi = −∞`
/// rather than a flag: insertion and merge reduce to plain min/max with no
/// branching on occupancy, and the struct stays two words wide — the
/// bucket array is the dominant memory traffic of the whole extractor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bucket<R: Real> {
    pub lo: R,
    pub hi: R,
}

impl<R: Real> Bucket<R> {
    fn empty() -> Self {
        Self {
            lo: R::infinity(),
            hi: R::neg_infinity(),
        }
    }

    /// Whether any value has landed in this bucket.
    pub fn occupied(&self) -> bool {
        self.lo <= self.hi
    }
}

/// Associative partial summary for the pigeonhole max-gap scan.
///
/// Two summaries over the same grid merge by per-bucket union; the scan
/// applied to a merged summary equals the scan after single-pass
/// construction over the concatenated inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct BucketSummary<R: Real> {
    buckets: Vec<Bucket<R>>,
    global_min: R,
    global_max: R,
}

impl<R: Real> BucketSummary<R> {
    /// An all-empty summary over `bucket_count` equal-width buckets on `[0,1]`.
    pub fn new(bucket_count: usize) -> Self {
        assert!(bucket_count >= 1, "need at least one bucket");
        Self {
            buckets: vec![Bucket::empty(); bucket_count],
            global_min: R::infinity(),
            global_max: R::neg_infinity(),
        }
    }

    pub fn bucket_count(&self) -> usize {
        self.buckets.len()
    }

    pub fn buckets(&self) -> &[Bucket<R>] {
        &self.buckets
    }

    pub fn global_min(&self) -> R {
        self.global_min
    }

    pub fn global_max(&self) -> R {
        self.global_max
    }

    /// Drops `v ∈ [0,1]` into its bucket; 1.0 is clamped into the last
    /// bucket since the index formula maps it out of range.
    pub fn insert(&mut self, v: R) {
        debug_assert!(v >= R::zero() && v <= R::one());
        let m = self.buckets.len();
        let idx = (v * real::<R>(m as f64))
            .floor()
            .to_usize()
            .unwrap_or(m - 1)
            .min(m - 1);
        let b = &mut self.buckets[idx];
        // the ±∞ sentinels of an empty bucket make these min/max total
        if v < b.lo {
            b.lo = v;
        }
        if v > b.hi {
            b.hi = v;
        }
        if v < self.global_min {
            self.global_min = v;
        }
        if v > self.global_max {
            self.global_max = v;
        }
    }

    pub fn insert_all(&mut self, values: &[R]) {
        for &v in values {
            self.insert(v);
        }
    }

    /// Per-bucket union. Associative and commutative with [`BucketSummary::new`]
    /// as identity; errors if the grids differ.
    pub fn merge(&self, other: &Self) -> Result<Self, GapError> {
        if self.buckets.len() != other.buckets.len() {
            return Err(GapError::GridMismatch {
                left: self.buckets.len(),
                right: other.buckets.len(),
            });
        }
        let buckets = self
            .buckets
            .iter()
            .zip(&other.buckets)
            .map(|(a, b)| Bucket {
                lo: if a.lo < b.lo { a.lo } else { b.lo },
                hi: if a.hi > b.hi { a.hi } else { b.hi },
            })
            .collect();
        Ok(Self {
            buckets,
            global_min: self.global_min.min(other.global_min),
            global_max: self.global_max.max(other.global_max),
        })
    }

    /// Largest gap between consecutive nonempty buckets (next bucket's lo
    /// minus previous bucket's hi). Ties break toward the smaller left
    /// endpoint. Returns `None` if fewer than two buckets are occupied.
    pub fn scan_max_gap(&self) -> Option<(R, (R, R))> {
        let mut prev_hi: Option<R> = None;
        let mut best: Option<(R, (R, R))> = None;
        for b in &self.buckets {
            if !b.occupied() {
                continue;
            }
            if let Some(hi) = prev_hi {
                let gap = b.lo - hi;
                match best {
                    Some((cur, _)) if gap <= cur => {}
                    _ => best = Some((gap, (hi, b.lo))),
                }
            }
            prev_hi = Some(b.hi);
        }
        best
    }
}

/// Pigeonhole grid sized for a sample set: `count + 2` augmented points in
/// `count + 1` buckets.
pub fn bucket_summary_for<R: Real>(s: &SampleSet<R>) -> BucketSummary<R> {
    BucketSummary::new(s.count() + 1)
}

/// Max-gap of `{0,1} ∪ values` in worst-case linear time and space.
///
/// Returns exactly the same value as the sort-based oracle (identical
/// arithmetic on identical operands) together with a witness pair.
pub fn max_gap_gonzalez<R: Real>(s: &SampleSet<R>) -> GapWitness<R> {
    let mut summary = bucket_summary_for(s);
    // augment in place instead of materializing a copy of the values
    summary.insert(R::zero());
    summary.insert_all(s.values());
    summary.insert(R::one());
    let (value, pair) = summary
        .scan_max_gap()
        .expect("0 and 1 occupy distinct buckets");
    GapWitness {
        n_gaps: s.n_gaps(),
        value,
        pair,
    }
}

/// Per-bucket union of two partial summaries built over the same grid.
pub fn merge_bucket_summaries<R: Real>(
    a: &BucketSummary<R>,
    b: &BucketSummary<R>,
) -> Result<BucketSummary<R>, GapError> {
    a.merge(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gap::gaps_oracle;
    use crate::rng::SplitMix64;
    use crate::sample::validate_samples;

    #[test]
    fn matches_hand_example() {
        let s = validate_samples(vec![0.2, 0.5, 0.9]).unwrap();
        let g = max_gap_gonzalez(&s);
        assert_eq!(g.value, 0.4);
        assert_eq!(g.pair, (0.5, 0.9));
        assert_eq!(g.n_gaps, 4);
    }

    #[test]
    fn all_duplicates_degenerate_case() {
        let s = validate_samples(vec![0.25, 0.25, 0.25]).unwrap();
        let g = max_gap_gonzalez(&s);
        assert_eq!(g.value, 0.75);
        assert_eq!(g.pair, (0.25, 1.0));
    }

    #[test]
    fn matches_oracle_on_random_input() {
        let mut rng = SplitMix64::new(0xBEEF);
        for _ in 0..50 {
            let n = 1 + rng.below(200) as usize;
            let vals: Vec<f64> = (0..n).map(|_| rng.next_f64()).collect();
            let s = validate_samples(vals).unwrap();
            let oracle = gaps_oracle(&s);
            let g = max_gap_gonzalez(&s);
            assert_eq!(g.value, oracle.max_gap);
            assert_eq!(g.pair, oracle.max_pair);
        }
    }

    #[test]
    fn bitwise_equal_on_ten_thousand_uniforms() {
        for seed in [1u64, 2, 3] {
            let mut rng = SplitMix64::new(seed);
            let vals: Vec<f64> = (0..10_000).map(|_| rng.next_f64()).collect();
            let s = validate_samples(vals).unwrap();
            assert_eq!(max_gap_gonzalez(&s).value, gaps_oracle(&s).max_gap);
        }
    }

    #[test]
    fn merge_identity() {
        let s = validate_samples(vec![0.2, 0.5, 0.9]).unwrap();
        let mut x = bucket_summary_for(&s);
        x.insert_all(&[0.0, 0.2, 0.5, 0.9, 1.0]);
        let empty = BucketSummary::new(x.bucket_count());
        assert_eq!(merge_bucket_summaries(&x, &empty).unwrap(), x);
        assert_eq!(merge_bucket_summaries(&empty, &x).unwrap(), x);
    }

    #[test]
    fn merged_halves_equal_unsplit() {
        let s = validate_samples(vec![0.2, 0.5, 0.9]).unwrap();
        let grid = s.count() + 1;
        let mut a = BucketSummary::new(grid);
        a.insert_all(&[0.0, 0.5]);
        let mut b = BucketSummary::new(grid);
        b.insert_all(&[0.2, 0.9, 1.0]);
        let merged = merge_bucket_summaries(&a, &b).unwrap();
        let (gap, pair) = merged.scan_max_gap().unwrap();
        assert_eq!(gap, 0.4);
        assert_eq!(pair, (0.5, 0.9));
    }

    #[test]
    fn grid_mismatch_rejected() {
        let a = BucketSummary::<f64>::new(4);
        let b = BucketSummary::<f64>::new(5);
        assert_eq!(
            merge_bucket_summaries(&a, &b).unwrap_err(),
            GapError::GridMismatch { left: 4, right: 5 }
        );
    }

    #[test]
    fn eight_way_partition_matches_oracle() {
        let mut rng = SplitMix64::new(99);
        let vals: Vec<f64> = (0..10_000).map(|_| rng.next_f64()).collect();
        let s = validate_samples(vals).unwrap();
        let mut pts = vec![0.0, 1.0];
        pts.extend_from_slice(s.values());
        let grid = s.count() + 1;
        let mut parts: Vec<BucketSummary<f64>> =
            (0..8).map(|_| BucketSummary::new(grid)).collect();
        for &p in &pts {
            parts[rng.below(8) as usize].insert(p);
        }
        let merged = parts
            .into_iter()
            .reduce(|a, b| merge_bucket_summaries(&a, &b).unwrap())
            .unwrap();
        let (gap, _) = merged.scan_max_gap().unwrap();
        assert_eq!(gap, gaps_oracle(&s).max_gap);
    }
}
