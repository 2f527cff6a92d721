//! `gapstat` — uniformity tests and Monte Carlo experiments on the unit
//! interval.
//!
//! Exit codes are a stable contract:
//! * 0 — test passed (or experiment completed),
//! * 1 — test rejected the uniformity null,
//! * 2 — usage or data error,
//! * 3 — I/O failure.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gapstat::cli::{parse_input, parse_method, render_text, run_test, CliError, InputFormat, RangeSpec};
use gapstat::harness::{emit_csv, run_experiment, ExperimentName, ExperimentSpec, HarnessError};
use gapstat::testkit::{Method, MinGapLaw, SignificanceConfig, Sidedness};

const EXIT_PASS: u8 = 0;
const EXIT_REJECT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "gapstat", version, about = "Uniformity testing with gap statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a data file for uniformity on the unit interval.
    Test(TestArgs),
    /// Run a seeded Monte Carlo experiment and emit a CSV curve.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct TestArgs {
    /// Method to run: chi2, max-gap or min-gap. Repeatable; when omitted,
    /// all three run and the joint decision is conservative (reject if any
    /// rejects).
    #[arg(long)]
    method: Vec<String>,

    /// Input file path ("-" for stdin).
    #[arg(long)]
    input: String,

    /// Input format: lines, csv:COL (0-based column) or f64le.
    #[arg(long, default_value = "lines")]
    format: String,

    /// Affine normalization range LO HI: values map as (v-lo)/(hi-lo).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    range: Option<Vec<f64>>,

    /// Significance level.
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,

    /// Decision rule sidedness.
    #[arg(long, value_enum, default_value_t = SidedArg::One)]
    sided: SidedArg,

    /// Reference law for the min-gap p-value.
    #[arg(long, value_enum, default_value_t = MinGapLawArg::Exact)]
    min_gap_law: MinGapLawArg,

    /// Emit the report as JSON instead of plain text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SidedArg {
    One,
    Two,
}

#[derive(Clone, Copy, ValueEnum)]
enum MinGapLawArg {
    Exact,
    Paper,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentArg {
    Uniform,
    Variance,
    MissingBand,
    Regularity,
}

impl From<ExperimentArg> for ExperimentName {
    fn from(a: ExperimentArg) -> Self {
        match a {
            ExperimentArg::Uniform => ExperimentName::UniformNull,
            ExperimentArg::Variance => ExperimentName::VarianceSweep,
            ExperimentArg::MissingBand => ExperimentName::MissingBandSweep,
            ExperimentArg::Regularity => ExperimentName::RegularitySweep,
        }
    }
}

#[derive(Args)]
struct ExperimentArgs {
    /// Which experiment regime to run.
    #[arg(long, value_enum)]
    name: ExperimentArg,

    /// Sample size per trial.
    #[arg(long, default_value_t = 10_000)]
    n: usize,

    /// Independent trials per sweep value.
    #[arg(long, default_value_t = 2000)]
    trials: u64,

    /// Base seed; together with the other flags it pins the output bytes.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Comma-separated sweep values; defaults to the regime's grid.
    #[arg(long, value_delimiter = ',')]
    sweep: Option<Vec<f64>>,

    /// Comma-separated methods (chi2, max-gap, min-gap); defaults to
    /// chi2,max-gap.
    #[arg(long, value_delimiter = ',')]
    methods: Option<Vec<String>>,

    /// Significance level for the reject-rate column.
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,

    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker thread bound; never changes the output bytes.
    #[arg(long)]
    parallel: Option<usize>,
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("gapstat: {message}");
    ExitCode::from(code)
}

fn cli_error_code(e: &CliError) -> u8 {
    match e {
        CliError::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn cmd_test(args: &TestArgs) -> Result<ExitCode, (u8, String)> {
    let usage = |m: String| (EXIT_USAGE, m);

    let format: InputFormat = args.format.parse().map_err(|e: CliError| usage(e.to_string()))?;
    let range = match &args.range {
        Some(pair) => Some(RangeSpec::new(pair[0], pair[1]).map_err(|e| usage(e.to_string()))?),
        None => None,
    };
    if !(args.alpha > 0.0 && args.alpha < 1.0) {
        return Err(usage(format!("alpha must be in (0,1), got {}", args.alpha)));
    }
    let methods: Vec<Method> = if args.method.is_empty() {
        Method::ALL.to_vec()
    } else {
        args.method
            .iter()
            .map(|s| parse_method(s).map_err(|e| usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let cfg = SignificanceConfig::new(
        args.alpha,
        match args.sided {
            SidedArg::One => Sidedness::OneSided,
            SidedArg::Two => Sidedness::TwoSided,
        },
    );
    let law = match args.min_gap_law {
        MinGapLawArg::Exact => MinGapLaw::Exact,
        MinGapLawArg::Paper => MinGapLaw::Paper,
    };

    let samples = if args.input == "-" {
        parse_input(io::stdin().lock(), format, range)
    } else {
        let file = File::open(&args.input)
            .map_err(|e| (EXIT_IO, format!("cannot open {}: {e}", args.input)))?;
        parse_input(file, format, range)
    }
    .map_err(|e| (cli_error_code(&e), e.to_string()))?;

    let report = run_test(&samples, &methods, &cfg, law)
        .map_err(|e| (cli_error_code(&e), e.to_string()))?;

    let rendered = if args.json {
        let mut s = serde_json::to_string_pretty(&report)
            .map_err(|e| (EXIT_IO, e.to_string()))?;
        s.push('\n');
        s
    } else {
        render_text(&report)
    };
    io::stdout()
        .write_all(rendered.as_bytes())
        .map_err(|e| (EXIT_IO, e.to_string()))?;

    Ok(ExitCode::from(if report.passed { EXIT_PASS } else { EXIT_REJECT }))
}

fn harness_error_code(e: &HarnessError) -> u8 {
    match e {
        HarnessError::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn cmd_experiment(args: &ExperimentArgs) -> Result<ExitCode, (u8, String)> {
    if !(args.alpha > 0.0 && args.alpha < 1.0) {
        return Err((EXIT_USAGE, format!("alpha must be in (0,1), got {}", args.alpha)));
    }
    let mut spec = ExperimentSpec::new(args.name.into(), args.seed);
    spec.n = args.n;
    spec.trials = args.trials;
    spec.alpha = args.alpha;
    if let Some(sweep) = &args.sweep {
        spec.sweep = sweep.clone();
    }
    if let Some(methods) = &args.methods {
        spec.methods = methods
            .iter()
            .map(|s| parse_method(s).map_err(|e| (EXIT_USAGE, e.to_string())))
            .collect::<Result<_, _>>()?;
    }

    let result = run_experiment(&spec, args.parallel)
        .map_err(|e| (harness_error_code(&e), e.to_string()))?;

    let emit = |w: &mut dyn Write| emit_csv(w, &result);
    match &args.out {
        Some(path) => {
            let mut file =
                File::create(path).map_err(|e| (EXIT_IO, format!("cannot create {}: {e}", path.display())))?;
            emit(&mut file)
        }
        None => emit(&mut io::stdout().lock()),
    }
    .map_err(|e| (harness_error_code(&e), e.to_string()))?;

    Ok(ExitCode::from(EXIT_PASS))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Test(args) => cmd_test(args),
        Command::Experiment(args) => cmd_experiment(args),
    };
    match result {
        Ok(code) => code,
        Err((code, message)) => fail(code, message),
    }
}
