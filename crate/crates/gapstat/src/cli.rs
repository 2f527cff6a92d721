//! Input parsing and report building for the `gapstat` binary.
//!
//! Parsing is deliberately strict: this is an integrity-auditing tool, so
//! malformed records are hard errors rather than silently skipped. Blank
//! lines and surrounding whitespace are tolerated; nothing else is.

use std::io::{BufRead, BufReader, Read};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::dist;
use crate::error::{SampleError, TestError};
use crate::sample::SampleSet;
use crate::testkit::{
    chi_square_uniformity_test, max_gap_test, min_gap_test, Method, MinGapLaw,
    SignificanceConfig, Sidedness,
};

/// How the input bytes encode observations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// Newline-delimited decimal text, one value per line.
    Lines,
    /// Comma-separated text; the 0-based column holds the value. A header
    /// row is skipped automatically when its selected field is non-numeric.
    Csv { column: usize },
    /// Raw little-endian IEEE-754 binary64, no header.
    F64le,
}

impl FromStr for InputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "lines" => Ok(InputFormat::Lines),
            "f64le" => Ok(InputFormat::F64le),
            _ => match s.strip_prefix("csv:") {
                Some(col) => col
                    .parse()
                    .map(|column| InputFormat::Csv { column })
                    .map_err(|_| CliError::BadFlag(format!("bad csv column index: {col:?}"))),
                None => Err(CliError::BadFlag(format!(
                    "unknown input format {s:?} (expected lines, csv:COL or f64le)"
                ))),
            },
        }
    }
}

/// Affine normalization range: raw values in `[lo, hi]` are mapped onto
/// the unit interval via `v ↦ (v − lo) / (hi − lo)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub lo: f64,
    pub hi: f64,
}

impl RangeSpec {
    pub fn new(lo: f64, hi: f64) -> Result<Self, CliError> {
        if !(lo < hi) {
            return Err(CliError::BadFlag(format!(
                "range requires lo < hi, got {lo} {hi}"
            )));
        }
        Ok(Self { lo, hi })
    }
}

/// Front-end failures, split so the binary can map them onto its exit-code
/// contract (usage/data errors vs I/O errors).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid flag: {0}")]
    BadFlag(String),
    #[error("parse error at record {record}: {message}")]
    Parse { record: usize, message: String },
    #[error("f64le stream length {len} is not a multiple of 8")]
    BadStreamLength { len: usize },
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error(transparent)]
    Test(#[from] TestError),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

fn parse_field(record: usize, field: &str) -> Result<f64, CliError> {
    field.trim().parse().map_err(|_| CliError::Parse {
        record,
        message: format!("not a number: {:?}", field.trim()),
    })
}

fn read_lines<R: BufRead>(source: R) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        values.push(parse_field(i + 1, t)?);
    }
    Ok(values)
}

fn read_csv<R: BufRead>(source: R, column: usize) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    let mut first_data_row = true;
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let field = line.split(',').nth(column).ok_or_else(|| CliError::Parse {
            record: i + 1,
            message: format!("row has no column {column}"),
        })?;
        match parse_field(i + 1, field) {
            Ok(v) => values.push(v),
            // a non-numeric selected field in the very first row is a header
            Err(_) if first_data_row => {}
            Err(e) => return Err(e),
        }
        first_data_row = false;
    }
    Ok(values)
}

fn read_f64le<R: Read>(mut source: R) -> Result<Vec<f64>, CliError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    if bytes.len() % 8 != 0 {
        return Err(CliError::BadStreamLength { len: bytes.len() });
    }
    Ok(bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect())
}

/// Parses observations from `source` per `format`, applies the optional
/// affine normalization, and validates the result (nonempty, all values in
/// `[0,1]`, no NaN).
pub fn parse_input<R: Read>(
    source: R,
    format: InputFormat,
    range: Option<RangeSpec>,
) -> Result<SampleSet<f64>, CliError> {
    let reader = BufReader::new(source);
    let mut values = match format {
        InputFormat::Lines => read_lines(reader)?,
        InputFormat::Csv { column } => read_csv(reader, column)?,
        InputFormat::F64le => read_f64le(reader)?,
    };
    if let Some(RangeSpec { lo, hi }) = range {
        for v in &mut values {
            *v = (*v - lo) / (hi - lo);
        }
    }
    Ok(SampleSet::new(values)?)
}

/// Per-method section of a test report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodReport {
    pub method: Method,
    pub statistic: f64,
    /// Gap count for the gap tests, degrees of freedom for chi-square.
    pub n_gaps_or_df: u64,
    pub p_one_sided: f64,
    pub p_two_sided: f64,
    pub passed: bool,
    pub witness: Option<(f64, f64)>,
    /// Mean of the statistic under the uniform null.
    pub expected_statistic: f64,
}

/// Complete report for one `test` invocation; serializes to JSON verbatim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub n: usize,
    /// Observations exactly equal to 0 or 1 after normalization.
    pub boundary_values: usize,
    pub alpha: f64,
    pub sidedness: Sidedness,
    pub min_gap_law: MinGapLaw,
    pub methods: Vec<MethodReport>,
    /// Joint decision: pass only if every requested method passes.
    pub passed: bool,
}

/// Runs the requested methods on one sample set and assembles the joint
/// report. The joint decision is conservative: reject if any method
/// rejects.
pub fn run_test(
    samples: &SampleSet<f64>,
    methods: &[Method],
    cfg: &SignificanceConfig,
    law: MinGapLaw,
) -> Result<Report, CliError> {
    let mut sections = Vec::with_capacity(methods.len());
    for &method in methods {
        let out = match method {
            Method::ChiSquare => chi_square_uniformity_test(samples, cfg)?,
            Method::MaxGap => max_gap_test(samples, cfg),
            Method::MinGap => min_gap_test(samples, cfg, law),
        };
        let expected = match method {
            Method::ChiSquare => out.n_gaps_or_df as f64,
            Method::MaxGap => dist::expected_max_gap(out.n_gaps_or_df),
            Method::MinGap => match law {
                MinGapLaw::Exact => dist::expected_min_gap_exact(out.n_gaps_or_df),
                MinGapLaw::Paper => dist::expected_min_gap_paper(out.n_gaps_or_df),
            },
        };
        sections.push(MethodReport {
            method,
            statistic: out.statistic,
            n_gaps_or_df: out.n_gaps_or_df,
            p_one_sided: out.p_one_sided,
            p_two_sided: out.p_two_sided,
            passed: out.passed,
            witness: out.witness,
            expected_statistic: expected,
        });
    }
    let passed = sections.iter().all(|m| m.passed);
    Ok(Report {
        n: samples.count(),
        boundary_values: samples.boundary_count(),
        alpha: cfg.alpha,
        sidedness: cfg.sidedness,
        min_gap_law: law,
        methods: sections,
        passed,
    })
}

/// Plain-text rendering. Numbers use Rust's shortest round-trip
/// formatting, so the printed values reparse exactly.
pub fn render_text(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "samples: {}", report.n);
    let _ = writeln!(out, "boundary values (exactly 0 or 1): {}", report.boundary_values);
    let _ = writeln!(
        out,
        "alpha: {} ({})",
        report.alpha,
        match report.sidedness {
            Sidedness::OneSided => "one-sided",
            Sidedness::TwoSided => "two-sided",
        }
    );
    for m in &report.methods {
        let _ = writeln!(out, "\nmethod: {}", m.method);
        let label = match m.method {
            Method::ChiSquare => "degrees of freedom",
            _ => "gaps",
        };
        let _ = writeln!(out, "  {label}: {}", m.n_gaps_or_df);
        let _ = writeln!(out, "  statistic: {}", m.statistic);
        let _ = writeln!(out, "  expected statistic under null: {}", m.expected_statistic);
        let _ = writeln!(out, "  p (one-sided): {}", m.p_one_sided);
        let _ = writeln!(out, "  p (two-sided): {}", m.p_two_sided);
        if let Some((a, b)) = m.witness {
            let _ = writeln!(out, "  witness gap: ({a}, {b})");
        }
        let _ = writeln!(out, "  decision: {}", if m.passed { "pass" } else { "REJECT" });
    }
    let _ = writeln!(
        out,
        "\noverall: {}",
        if report.passed { "pass" } else { "REJECT" }
    );
    out
}

/// Parses a method name as spelled on the command line.
pub fn parse_method(s: &str) -> Result<Method, CliError> {
    match s {
        "chi2" | "chi-square" | "chi_square" => Ok(Method::ChiSquare),
        "max-gap" | "max_gap" => Ok(Method::MaxGap),
        "min-gap" | "min_gap" => Ok(Method::MinGap),
        _ => Err(CliError::BadFlag(format!(
            "unknown method {s:?} (expected chi2, max-gap or min-gap)"
        ))),
    }
}
