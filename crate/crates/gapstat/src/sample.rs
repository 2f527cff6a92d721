use crate::error::SampleError;
use crate::Real;

/// A validated multiset of observations on the closed unit interval.
///
/// Values are kept verbatim: no deduplication, no sorting. Duplicates are
/// legal inputs everywhere (a zero min-gap is meaningful tamper evidence).
/// The interval endpoints `{0, 1}` are *not* stored here; gap operations
/// augment with them internally, so a set of `count` observations induces
/// `count + 1` gaps.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet<R: Real> {
    values: Vec<R>,
}

impl<R: Real> SampleSet<R> {
    /// Validates and wraps raw observations. See [`validate_samples`].
    pub fn new(raw: Vec<R>) -> Result<Self, SampleError> {
        if raw.is_empty() {
            return Err(SampleError::Empty);
        }
        for (index, &v) in raw.iter().enumerate() {
            if !(v >= R::zero() && v <= R::one()) {
                return Err(SampleError::OutOfRange {
                    index,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { values: raw })
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// Number of observations.
    pub fn count(&self) -> usize {
        self.values.len()
    }

    /// Number of gaps induced by the observations together with `{0, 1}`.
    pub fn n_gaps(&self) -> u64 {
        self.values.len() as u64 + 1
    }

    /// How many observations sit exactly on an interval endpoint.
    pub fn boundary_count(&self) -> usize {
        self.values
            .iter()
            .filter(|&&v| v == R::zero() || v == R::one())
            .count()
    }
}

/// Validates a raw sequence: every value must lie in `[0, 1]` and the
/// sequence must be nonempty. Values are preserved verbatim.
pub fn validate_samples<R: Real>(raw: Vec<R>) -> Result<SampleSet<R>, SampleError> {
    SampleSet::new(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_through() {
        let s = validate_samples(vec![0.2, 0.5, 0.9]).unwrap();
        assert_eq!(s.count(), 3);
        assert_eq!(s.n_gaps(), 4);
        assert_eq!(s.values(), &[0.2, 0.5, 0.9]);
    }

    #[test]
    fn out_of_range_reports_index_and_value() {
        let err = validate_samples(vec![0.2, 1.5]).unwrap_err();
        assert_eq!(err, SampleError::OutOfRange { index: 1, value: 1.5 });
    }

    #[test]
    fn empty_rejected() {
        let err = validate_samples(Vec::<f64>::new()).unwrap_err();
        assert_eq!(err, SampleError::Empty);
    }

    #[test]
    fn nan_rejected() {
        let err = validate_samples(vec![0.1, f64::NAN]).unwrap_err();
        assert!(matches!(err, SampleError::OutOfRange { index: 1, .. }));
    }

    #[test]
    fn endpoints_allowed_and_tallied() {
        let s = validate_samples(vec![0.0, 0.5, 1.0]).unwrap();
        assert_eq!(s.boundary_count(), 2);
    }

    #[test]
    fn duplicates_preserved() {
        let s = validate_samples(vec![0.3, 0.3]).unwrap();
        assert_eq!(s.count(), 2);
    }
}
