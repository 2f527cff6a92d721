//! Monte Carlo experiment harness: repeated independent trials at fixed
//! sample size, swept over one generator parameter, aggregated to
//! plot-ready mean-p curves.
//!
//! Trials are embarrassingly parallel; every trial derives its own seed
//! from `(base_seed, sweep index, trial index)` and aggregation runs in a
//! fixed order with compensated summation, so the output bytes do not
//! depend on the degree of parallelism.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::datagen::{GeneratorKind, GeneratorSpec};
use crate::rng::mix64;
use crate::testkit::{
    chi_square_uniformity_test, max_gap_test, min_gap_test, Method, MinGapLaw, SignificanceConfig,
    TestOutcome,
};

/// The four experiment regimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentName {
    /// True uniform data; sweep is a singleton placeholder.
    UniformNull,
    /// Truncated normal, sweeping the standard deviation.
    VarianceSweep,
    /// Uniform with a centered exclusion band, sweeping the band width.
    MissingBandSweep,
    /// Stratified data, sweeping the stratum count k.
    RegularitySweep,
}

impl ExperimentName {
    pub fn as_str(self) -> &'static str {
        match self {
            ExperimentName::UniformNull => "uniform_null",
            ExperimentName::VarianceSweep => "variance_sweep",
            ExperimentName::MissingBandSweep => "missing_band_sweep",
            ExperimentName::RegularitySweep => "regularity_sweep",
        }
    }

    /// Default sweep grid, log-spaced to bracket the transition regions.
    pub fn default_sweep(self) -> Vec<f64> {
        match self {
            ExperimentName::UniformNull => vec![0.0],
            ExperimentName::VarianceSweep => vec![0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 10.0],
            ExperimentName::MissingBandSweep => vec![0.0, 1e-3, 2.5e-3, 5e-3, 1e-2],
            ExperimentName::RegularitySweep => vec![1.0, 2.0, 5.0, 10.0, 100.0, 1000.0],
        }
    }
}

impl std::fmt::Display for ExperimentName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A fully pinned experiment: rerunning the same spec reproduces the same
/// bytes.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub name: ExperimentName,
    pub n: usize,
    pub trials: u64,
    pub base_seed: u64,
    pub sweep: Vec<f64>,
    pub methods: Vec<Method>,
    pub alpha: f64,
    pub min_gap_law: MinGapLaw,
}

impl ExperimentSpec {
    /// Desk-scale defaults: n = 10_000, 2000 trials, chi-square + max-gap.
    pub fn new(name: ExperimentName, base_seed: u64) -> Self {
        Self {
            name,
            n: 10_000,
            trials: 2000,
            base_seed,
            sweep: name.default_sweep(),
            methods: vec![Method::ChiSquare, Method::MaxGap],
            alpha: 0.05,
            min_gap_law: MinGapLaw::Exact,
        }
    }

    fn validate(&self) -> Result<(), HarnessError> {
        if self.trials < 1 || self.sweep.is_empty() || self.methods.is_empty() {
            return Err(HarnessError::BadSpec(format!(
                "need trials >= 1, a nonempty sweep and at least one method: {self:?}"
            )));
        }
        Ok(())
    }

    fn generator(&self, sweep_value: f64, seed: u64) -> GeneratorSpec {
        let kind = match self.name {
            ExperimentName::UniformNull => GeneratorKind::Uniform,
            ExperimentName::VarianceSweep => GeneratorKind::TruncatedNormal { sigma: sweep_value },
            ExperimentName::MissingBandSweep => GeneratorKind::BandExcluded {
                width: sweep_value,
                center: 0.5,
            },
            ExperimentName::RegularitySweep => GeneratorKind::Regular {
                k: sweep_value as u64,
            },
        };
        GeneratorSpec {
            kind,
            n: self.n,
            seed,
        }
    }
}

/// One `(sweep value, trial, method)` observation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub sweep_value: f64,
    pub trial_index: u64,
    pub method: Method,
    pub statistic: f64,
    pub p_one_sided: f64,
    pub p_two_sided: f64,
}

/// Aggregated curve point for one `(sweep value, method)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePoint {
    pub sweep_value: f64,
    pub method: Method,
    pub mean_p_one_sided: f64,
    pub mean_p_two_sided: f64,
    /// Standard error of the one-sided mean.
    pub stderr: f64,
    /// Fraction of trials with one-sided p below alpha.
    pub reject_rate_at_alpha: f64,
}

/// Everything a run produced.
#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub spec: ExperimentSpec,
    pub points: Vec<CurvePoint>,
    pub records: Vec<TrialRecord>,
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid experiment spec: {0}")]
    BadSpec(String),
    #[error("trial failed at sweep_value={sweep_value}, trial={trial}: {message}")]
    Trial {
        sweep_value: f64,
        trial: u64,
        message: String,
    },
    #[error("failed to write output: {0}")]
    Io(#[from] std::io::Error),
}

/// Mixes `(base_seed, sweep index, trial index)` into a trial seed with a
/// 64-bit avalanche permutation per level; injective in practice.
pub fn derive_trial_seed(base_seed: u64, sweep_index: u64, trial_index: u64) -> u64 {
    mix64(mix64(mix64(base_seed) ^ sweep_index.wrapping_mul(0x9E37_79B9_7F4A_7C15)) ^ trial_index)
}

/// Compensated (Kahan) accumulator.
#[derive(Debug, Clone, Copy, Default)]
struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(self) -> f64 {
        self.sum
    }
}

fn run_trial(
    spec: &ExperimentSpec,
    sweep_index: usize,
    trial: u64,
) -> Result<Vec<TrialRecord>, HarnessError> {
    let sweep_value = spec.sweep[sweep_index];
    let seed = derive_trial_seed(spec.base_seed, sweep_index as u64, trial);
    let context = |message: String| HarnessError::Trial {
        sweep_value,
        trial,
        message,
    };
    let samples = spec
        .generator(sweep_value, seed)
        .generate()
        .map_err(|e| context(e.to_string()))?;
    let cfg = SignificanceConfig::one_sided(spec.alpha);
    spec.methods
        .iter()
        .map(|&method| {
            let out: TestOutcome = match method {
                Method::ChiSquare => chi_square_uniformity_test(&samples, &cfg)
                    .map_err(|e| context(e.to_string()))?,
                Method::MaxGap => max_gap_test(&samples, &cfg),
                Method::MinGap => min_gap_test(&samples, &cfg, spec.min_gap_law),
            };
            Ok(TrialRecord {
                sweep_value,
                trial_index: trial,
                method,
                statistic: out.statistic,
                p_one_sided: out.p_one_sided,
                p_two_sided: out.p_two_sided,
            })
        })
        .collect()
}

/// Runs every `(sweep value, trial)` cell and aggregates mean p-values,
/// standard errors and rejection rates per `(sweep value, method)`.
///
/// `parallel` bounds the worker count (`None` uses the global pool; 1
/// forces sequential execution); it never changes the output bytes.
pub fn run_experiment(
    spec: &ExperimentSpec,
    parallel: Option<usize>,
) -> Result<ExperimentResult, HarnessError> {
    spec.validate()?;
    let cells: Vec<(usize, u64)> = (0..spec.sweep.len())
        .flat_map(|si| (0..spec.trials).map(move |t| (si, t)))
        .collect();

    let run_all = || -> Result<Vec<Vec<TrialRecord>>, HarnessError> {
        cells
            .par_iter()
            .map(|&(si, t)| run_trial(spec, si, t))
            .collect()
    };
    let per_cell = match parallel {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| HarnessError::BadSpec(e.to_string()))?
            .install(run_all),
        None => run_all(),
    }?;
    let records: Vec<TrialRecord> = per_cell.into_iter().flatten().collect();

    // Fixed-order compensated aggregation, independent of the schedule.
    let mut points = Vec::with_capacity(spec.sweep.len() * spec.methods.len());
    for (si, &sweep_value) in spec.sweep.iter().enumerate() {
        for &method in &spec.methods {
            let cell: Vec<&TrialRecord> = records
                .iter()
                .skip(si * spec.trials as usize * spec.methods.len())
                .take(spec.trials as usize * spec.methods.len())
                .filter(|r| r.method == method)
                .collect();
            debug_assert_eq!(cell.len() as u64, spec.trials);
            let mut one = KahanSum::default();
            let mut two = KahanSum::default();
            let mut rejects = 0u64;
            for r in &cell {
                one.add(r.p_one_sided);
                two.add(r.p_two_sided);
                if r.p_one_sided < spec.alpha {
                    rejects += 1;
                }
            }
            let t = spec.trials as f64;
            let mean_one = one.value() / t;
            let mean_two = two.value() / t;
            let stderr = if spec.trials > 1 {
                let mut var = KahanSum::default();
                for r in &cell {
                    let d = r.p_one_sided - mean_one;
                    var.add(d * d);
                }
                (var.value() / (t * (t - 1.0))).sqrt()
            } else {
                0.0
            };
            points.push(CurvePoint {
                sweep_value,
                method,
                mean_p_one_sided: mean_one,
                mean_p_two_sided: mean_two,
                stderr,
                reject_rate_at_alpha: rejects as f64 / t,
            });
        }
    }

    Ok(ExperimentResult {
        spec: spec.clone(),
        points,
        records,
    })
}

/// Decimal text with 9 significant digits.
fn sig9(x: f64) -> String {
    format!("{x:.8e}")
}

/// Writes the aggregated curve as CSV with the fixed column set
/// `experiment, sweep_value, method, mean_p_one_sided, mean_p_two_sided,
/// stderr, reject_rate, trials, n, base_seed`.
pub fn emit_csv<W: Write + ?Sized>(out: &mut W, result: &ExperimentResult) -> Result<(), HarnessError> {
    writeln!(
        out,
        "experiment,sweep_value,method,mean_p_one_sided,mean_p_two_sided,stderr,reject_rate,trials,n,base_seed"
    )?;
    let spec = &result.spec;
    for p in &result.points {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            spec.name,
            sig9(p.sweep_value),
            p.method,
            sig9(p.mean_p_one_sided),
            sig9(p.mean_p_two_sided),
            sig9(p.stderr),
            sig9(p.reject_rate_at_alpha),
            spec.trials,
            spec.n,
            spec.base_seed
        )?;
    }
    Ok(())
}

/// Writes raw per-trial records as JSON lines, one object per record.
pub fn emit_jsonl<W: Write>(out: &mut W, records: &[TrialRecord]) -> Result<(), HarnessError> {
    for r in records {
        serde_json::to_writer(&mut *out, r).map_err(std::io::Error::from)?;
        writeln!(out)?;
    }
    Ok(())
}
