//! Expected-linear-time min-gap via a randomized incremental grid.
//!
//! Points of `{0,1} ∪ values` are inserted in a random order into a uniform
//! cell index whose width is the closest distance seen so far. Each new
//! point probes its own and nearby cells; when it improves the minimum the
//! whole index is rebuilt at the new width. With a random insertion order
//! the expected total work is linear. The returned value is exact — only
//! the running time is randomized.

use std::collections::HashMap;

use crate::rng::SplitMix64;
use crate::sample::SampleSet;
use crate::Real;

use super::{augmented, GapWitness};

/// Cells two wide on each side absorb the floating-point slop in the
/// quotient, so any pair closer than the cell width is always probed.
const PROBE_RADIUS: i64 = 2;

fn cell_key<R: Real>(v: R, width: R) -> i64 {
    // Saturating cast keeps the key total for degenerate widths; far cells
    // then coalesce, which costs probes but never correctness.
    let q = (v / width).floor().to_f64().unwrap_or(0.0);
    q as i64
}

fn ordered<R: Real>(a: R, b: R) -> (R, R) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Witness for a zero min-gap: the smallest value occurring at least
/// twice, matching the sort oracle's smaller-left-endpoint tie-break.
fn smallest_duplicate<R: Real>(pts: &[R]) -> (R, R) {
    let mut seen = std::collections::HashSet::with_capacity(pts.len());
    let mut best: Option<R> = None;
    for &p in pts {
        // +0 folds −0.0 into +0.0 so numerically equal points share bits
        let bits = (p + R::zero()).to_f64().expect("validated value").to_bits();
        if !seen.insert(bits) && best.map_or(true, |b| p < b) {
            best = Some(p);
        }
    }
    let v = best.expect("zero min-gap implies a duplicated point");
    (v, v)
}

/// Exact min-gap of `{0,1} ∪ values` with a witness pair.
///
/// `rng` drives only the insertion permutation. Duplicate values
/// short-circuit with `min_gap = 0` before any zero-width grid is built.
/// Ties in the witness break toward the smaller left endpoint.
pub fn min_gap_rabin<R: Real>(s: &SampleSet<R>, rng: &mut SplitMix64) -> GapWitness<R> {
    let mut pts = augmented(s);
    rng.shuffle(&mut pts);
    let n_gaps = s.n_gaps();

    let mut best = (pts[1] - pts[0]).abs();
    let mut pair = ordered(pts[0], pts[1]);
    if best == R::zero() {
        return GapWitness {
            n_gaps,
            value: best,
            pair: smallest_duplicate(&pts),
        };
    }

    let mut grid: HashMap<i64, Vec<R>> = HashMap::new();
    for &p in &pts[..2] {
        grid.entry(cell_key(p, best)).or_default().push(p);
    }

    for (i, &p) in pts.iter().enumerate().skip(2) {
        let key = cell_key(p, best);
        let mut improved = false;
        for k in key - PROBE_RADIUS..=key + PROBE_RADIUS {
            let Some(cell) = grid.get(&k) else { continue };
            for &q in cell {
                let d = (p - q).abs();
                if d < best {
                    best = d;
                    pair = ordered(p, q);
                    improved = true;
                } else if d == best {
                    let cand = ordered(p, q);
                    if cand.0 < pair.0 {
                        pair = cand;
                    }
                }
            }
        }
        if best == R::zero() {
            return GapWitness {
                n_gaps,
                value: best,
                pair: smallest_duplicate(&pts),
            };
        }
        if improved {
            grid.clear();
            for &q in &pts[..=i] {
                grid.entry(cell_key(q, best)).or_default().push(q);
            }
        } else {
            grid.entry(key).or_default().push(p);
        }
    }

    GapWitness {
        n_gaps,
        value: best,
        pair,
    }
}
