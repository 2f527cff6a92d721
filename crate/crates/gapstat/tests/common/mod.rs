//! Independent numeric oracles for the integration suites.
//!
//! Everything here is implemented from scratch — different formulas and
//! different code paths than the library — so agreement is evidence, not
//! tautology.

#![allow(dead_code)]

/// Log-gamma via the Stirling series after shifting the argument above 15.
///
/// Independent of the library's Lanczos-based implementation.
pub fn ln_gamma_oracle(x: f64) -> f64 {
    assert!(x > 0.0);
    let mut shift = 0.0;
    let mut z = x;
    while z < 15.0 {
        shift -= z.ln();
        z += 1.0;
    }
    let zi = 1.0 / z;
    let zi2 = zi * zi;
    let series = zi
        * (1.0 / 12.0
            + zi2 * (-1.0 / 360.0 + zi2 * (1.0 / 1260.0 + zi2 * (-1.0 / 1680.0 + zi2 / 1188.0))));
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + series + shift
}

/// Chi-square survival function by brute-force quadrature.
///
/// Substituting `x = t²` removes the `df = 1` endpoint singularity; the
/// transformed density is integrated with composite Simpson from `√stat`
/// to a point far in the tail.
pub fn chi_square_sf_oracle(stat: f64, df: u64) -> f64 {
    assert!(stat >= 0.0 && df >= 1);
    let a = df as f64 / 2.0;
    let ln_norm = -a * 2f64.ln() - ln_gamma_oracle(a) + 2f64.ln();
    // transformed density g(t) = 2 t^{2a-1} e^{-t²/2} / (2^a Γ(a))
    let g = |t: f64| -> f64 {
        if t == 0.0 {
            return if df == 1 { ln_norm.exp() } else { 0.0 };
        }
        ((2.0 * a - 1.0) * t.ln() - t * t / 2.0 + ln_norm).exp()
    };
    let x_hi = df as f64 + 50.0 * (2.0 * df as f64).sqrt() + 200.0;
    let lo = stat.sqrt();
    let hi = x_hi.sqrt();
    if lo >= hi {
        return 0.0;
    }
    // composite Simpson
    let m = 400_000usize; // even
    let h = (hi - lo) / m as f64;
    let mut sum = g(lo) + g(hi);
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * g(lo + i as f64 * h);
    }
    (sum * h / 3.0).clamp(0.0, 1.0)
}

/// Direct evaluation of the exact largest-spacing CDF
/// `Σ (−1)^ν C(n,ν)(1−νx)₊^{n−1}` with a multiplicative binomial
/// recurrence and compensated summation, returning `(value, error bound)`.
///
/// The error bound is `max |term| · terms · ε`; where it exceeds the
/// caller's tolerance the alternating sum has cancelled away the answer
/// and the value must not be trusted.
pub fn exact_max_gap_cdf_oracle(x: f64, n: u64) -> (f64, f64) {
    if x >= 1.0 {
        return (1.0, 0.0);
    }
    if x * n as f64 <= 1.0 {
        // pigeonhole: the largest of n spacings is at least 1/n
        return (if n == 1 { 1.0 } else { 0.0 }, 0.0);
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut binom = 1.0f64; // C(n, 0)
    let mut max_term = 0.0f64;
    let mut terms = 0u64;
    for nu in 0..=n {
        if nu > 0 {
            binom *= (n - nu + 1) as f64 / nu as f64;
        }
        let base = 1.0 - nu as f64 * x;
        if base <= 0.0 {
            break;
        }
        let magnitude = binom * base.powi(n as i32 - 1);
        max_term = max_term.max(magnitude);
        terms += 1;
        let term = if nu % 2 == 0 { magnitude } else { -magnitude };
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let err = max_term * terms as f64 * f64::EPSILON;
    (sum.clamp(0.0, 1.0), err)
}

/// Kolmogorov distance between the empirical CDF of a sorted sample and a
/// reference CDF.
pub fn ks_distance_sorted<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> f64 {
    let n = sorted.len() as f64;
    let mut ks = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        ks = ks.max((f - i as f64 / n).abs());
        ks = ks.max((f - (i + 1) as f64 / n).abs());
    }
    ks
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

pub fn sort_unstable(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    values
}
