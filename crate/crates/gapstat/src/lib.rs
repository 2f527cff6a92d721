//! Uniformity testing on the unit interval with gap statistics.
//!
//! The crate provides three hypothesis tests for the null "the data are
//! i.i.d. uniform on (0,1)":
//!
//! * a max-gap test (largest spacing of the sample augmented with the
//!   interval endpoints, extracted in linear time without sorting),
//! * a min-gap test (smallest spacing, extracted in expected linear time
//!   with a randomized incremental closest-pair grid),
//! * the classical chi-square goodness-of-fit test with one bin per
//!   observation.
//!
//! On top of the tests sits a seeded Monte Carlo harness ([`harness`]) that
//! sweeps generator parameters over many independent trials and emits
//! plot-ready CSV, and a CLI (`gapstat`) for auditing real data files.
//!
//! Core numerics ([`gap`], [`dist`]) are generic over the scalar type via
//! [`Real`]; concrete `f64` aliases live at the crate root.

pub mod cli;
pub mod datagen;
pub mod dist;
pub mod error;
pub mod gap;
pub mod harness;
pub mod rng;
pub mod sample;
pub mod testkit;

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Scalar type the core math is generic over.
///
/// Implemented by `f32` and `f64` through the blanket impl.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
pub(crate) fn real<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("constant representable in scalar type")
}

pub use error::{DataGenError, DistError, GapError, SampleError, TestError};
pub use sample::{validate_samples, SampleSet};

/// `f64` sample set, the type every generator and the CLI produce.
pub type SampleSet64 = SampleSet<f64>;
/// `f64` gap summary.
pub type GapSummary64 = gap::GapSummary<f64>;
/// `f64` bucket summary for parallel max-gap reduction.
pub type BucketSummary64 = gap::BucketSummary<f64>;
