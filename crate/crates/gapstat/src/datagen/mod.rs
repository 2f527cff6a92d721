//! Deterministic, seedable generators for the four experimental data
//! regimes: true uniform, interval-truncated normal, uniform with a
//! narrow-band exclusion, and stratified high-regularity data.
//!
//! Every generator is a pure function of `(spec, seed)`: identical inputs
//! produce bit-identical output, on any platform, because the pseudorandom
//! source is the crate's own [`SplitMix64`] rather than a platform RNG.

mod normal;

pub use normal::{norm_cdf, norm_ppf};

use crate::error::DataGenError;
use crate::rng::SplitMix64;
use crate::sample::SampleSet;

/// Which regime to draw from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorKind {
    /// i.i.d. uniform on (0,1).
    Uniform,
    /// Normal(0.5, sigma) conditioned on (0,1). The center is fixed at 0.5,
    /// the only choice symmetric in the interval.
    TruncatedNormal { sigma: f64 },
    /// Uniform on (0,1) minus an open exclusion band, by resampling.
    BandExcluded { width: f64, center: f64 },
    /// `k` equal-width strata, each receiving an equal share of uniform
    /// draws; `k = 1` reduces exactly to `Uniform`.
    Regular { k: u64 },
}

/// A fully specified generation request.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<SampleSet<f64>, DataGenError> {
        match self.kind {
            GeneratorKind::Uniform => Ok(gen_uniform(self.n, self.seed)),
            GeneratorKind::TruncatedNormal { sigma } => {
                Ok(gen_truncated_normal(self.n, sigma, self.seed))
            }
            GeneratorKind::BandExcluded { width, center } => {
                gen_band_excluded(self.n, width, center, self.seed)
            }
            GeneratorKind::Regular { k } => gen_regular(self.n, k, self.seed),
        }
    }
}

fn sample_set(values: Vec<f64>) -> SampleSet<f64> {
    SampleSet::new(values).expect("generators produce nonempty in-range values")
}

/// `n` independent uniform(0,1) draws.
pub fn gen_uniform(n: usize, seed: u64) -> SampleSet<f64> {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    sample_set((0..n).map(|_| rng.next_f64()).collect())
}

/// `n` draws from Normal(0.5, sigma) conditioned on (0,1), by inverse-CDF
/// sampling between `Φ(−0.5/σ)` and `Φ(0.5/σ)`.
pub fn gen_truncated_normal(n: usize, sigma: f64, seed: u64) -> SampleSet<f64> {
    assert!(n >= 1);
    assert!(sigma > 0.0, "sigma must be positive, got {sigma}");
    let lo = norm_cdf(-0.5 / sigma);
    let hi = norm_cdf(0.5 / sigma);
    let mut rng = SplitMix64::new(seed);
    let values = (0..n)
        .map(|_| {
            let t = lo + rng.next_f64() * (hi - lo);
            // guard the open-interval edges against rounding
            let t = t.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0);
            (0.5 + sigma * norm_ppf(t)).clamp(0.0, 1.0)
        })
        .collect();
    sample_set(values)
}

/// `n` draws uniform on `(0,1)` minus the open band
/// `(center − width/2, center + width/2)`, by resampling band hits. The
/// result is exactly uniform on the complement. `width = 0` follows the
/// same draw sequence as [`gen_uniform`].
pub fn gen_band_excluded(
    n: usize,
    width: f64,
    center: f64,
    seed: u64,
) -> Result<SampleSet<f64>, DataGenError> {
    assert!(n >= 1);
    if !(0.0..1.0).contains(&width) {
        return Err(DataGenError::BandTooWide { width });
    }
    let lo = center - width / 2.0;
    let hi = center + width / 2.0;
    if width > 0.0 && !(lo > 0.0 && hi < 1.0) {
        return Err(DataGenError::BandOutsideUnit { lo, hi });
    }
    let mut rng = SplitMix64::new(seed);
    let values = (0..n)
        .map(|_| loop {
            let v = rng.next_f64();
            if !(v > lo && v < hi) {
                break v;
            }
        })
        .collect();
    Ok(sample_set(values))
}

/// Stratified draws: bin `i` of `k` equal-width bins receives `⌊n/k⌋`
/// uniform draws in `[i/k, (i+1)/k)`, plus one extra for each of the first
/// `n mod k` bins.
pub fn gen_regular(n: usize, k: u64, seed: u64) -> Result<SampleSet<f64>, DataGenError> {
    assert!(n >= 1);
    if k < 1 || k as usize > n {
        return Err(DataGenError::BadStratumCount { k, n });
    }
    let mut rng = SplitMix64::new(seed);
    let base = n / k as usize;
    let extra = n % k as usize;
    let kf = k as f64;
    let mut values = Vec::with_capacity(n);
    for i in 0..k as usize {
        let m = base + usize::from(i < extra);
        for _ in 0..m {
            values.push((i as f64 + rng.next_f64()) / kf);
        }
    }
    Ok(sample_set(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gap::gaps_oracle;

    #[test]
    fn uniform_deterministic() {
        assert_eq!(gen_uniform(1000, 9).values(), gen_uniform(1000, 9).values());
    }

    #[test]
    fn uniform_mean_near_half() {
        let s = gen_uniform(10_000, 4);
        let mean: f64 = s.values().iter().sum::<f64>() / s.count() as f64;
        // 3σ CLT bound with σ² = 1/12
        assert!((mean - 0.5).abs() < 0.015, "mean={mean}");
    }

    #[test]
    fn uniform_max_gap_near_expected() {
        let expected = crate::dist::expected_max_gap::<f64>(10_000);
        for seed in 0..20 {
            let s = gen_uniform(10_000, seed);
            let g = gaps_oracle(&s).max_gap;
            assert!(
                g > 0.3 * expected && g < 3.0 * expected,
                "seed={seed} gap={g}"
            );
        }
    }

    #[test]
    fn truncated_normal_three_sigma_mass() {
        let s = gen_truncated_normal(10_000, 0.05, 11);
        // |v - 0.5| < 3σ holds with probability ≈ 0.9973
        let inside = s
            .values()
            .iter()
            .filter(|&&v| v > 0.35 && v < 0.65)
            .count();
        assert!(inside as f64 >= 0.99 * s.count() as f64);
        // and ±5σ is essentially certain
        assert!(s.values().iter().all(|&v| v > 0.25 && v < 0.75));
    }

    #[test]
    fn truncated_normal_wide_sigma_is_nearly_uniform() {
        let s = gen_truncated_normal(10_000, 100.0, 13);
        // empirical CDF vs uniform, Kolmogorov distance
        let mut v = s.values().to_vec();
        v.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        let n = v.len() as f64;
        let mut ks: f64 = 0.0;
        for (i, &x) in v.iter().enumerate() {
            ks = ks.max((x - i as f64 / n).abs());
            ks = ks.max((x - (i + 1) as f64 / n).abs());
        }
        assert!(ks < 0.01, "ks={ks}");
    }

    #[test]
    fn truncated_normal_deterministic() {
        assert_eq!(
            gen_truncated_normal(500, 0.2, 77).values(),
            gen_truncated_normal(500, 0.2, 77).values()
        );
    }

    #[test]
    fn band_zero_width_matches_uniform_stream() {
        let a = gen_band_excluded(1000, 0.0, 0.5, 21).unwrap();
        let b = gen_uniform(1000, 21);
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn band_never_intersected_and_gap_at_least_width() {
        let s = gen_band_excluded(10_000, 0.01, 0.5, 3).unwrap();
        assert!(s.values().iter().all(|&v| !(v > 0.495 && v < 0.505)));
        assert!(gaps_oracle(&s).max_gap >= 0.01);
    }

    #[test]
    fn band_width_one_rejected() {
        assert!(matches!(
            gen_band_excluded(10, 1.0, 0.5, 0),
            Err(DataGenError::BandTooWide { .. })
        ));
    }

    #[test]
    fn band_outside_unit_rejected() {
        assert!(matches!(
            gen_band_excluded(10, 0.5, 0.1, 0),
            Err(DataGenError::BandOutsideUnit { .. })
        ));
    }

    #[test]
    fn regular_k1_is_exactly_uniform() {
        let a = gen_regular(1000, 1, 5).unwrap();
        let b = gen_uniform(1000, 5);
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn regular_k_equals_n_is_near_equal_spacing() {
        let n = 1000;
        let s = gen_regular(n, n as u64, 8).unwrap();
        // one sample per width-1/n bin, so no gap can reach 2/n
        assert!(gaps_oracle(&s).max_gap < 2.0 / n as f64);
    }

    #[test]
    fn regular_counts_per_bin() {
        let s = gen_regular(10_000, 100, 2).unwrap();
        let mut counts = [0usize; 100];
        for &v in s.values() {
            counts[((v * 100.0) as usize).min(99)] += 1;
        }
        assert!(counts.iter().all(|&c| c == 100));
    }

    #[test]
    fn regular_uneven_division_round_robin() {
        let s = gen_regular(10, 3, 1).unwrap();
        let mut counts = [0usize; 3];
        for &v in s.values() {
            counts[((v * 3.0) as usize).min(2)] += 1;
        }
        assert_eq!(counts, [4, 3, 3]);
    }

    #[test]
    fn regular_k_larger_than_n_rejected() {
        assert!(matches!(
            gen_regular(5, 6, 0),
            Err(DataGenError::BadStratumCount { .. })
        ));
    }
}
