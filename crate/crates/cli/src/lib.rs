//! `fundstyle` command-line front end.

pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fundstyle_core::pipeline::load_monthly;
use fundstyle_core::{
    analyze_fund, analyze_series, classify_dominant, decompose_with_period, default_style_rules,
    load_rules, parse_fund_spec, PipelineError, StyleCheckError, VerdictThresholds,
    DEFAULT_PERIOD, DEFAULT_THRESHOLD,
};
use thiserror::Error;

pub use render::{Format, Rounding};

#[derive(Debug, Parser)]
#[command(name = "fundstyle", version, about = "Decompose monthly stock prices and check fund style consistency")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the aggregate, trend, seasonal and random value of every month
    Decompose(SeriesArgs),
    /// Print max/min/mean component percentages and the dominant components
    Summarize(SeriesArgs),
    /// Summarize every holding of a fund and check it against the fund's style
    AnalyzeFund(FundArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Show unrounded values in text output
    #[arg(long)]
    pub full_precision: bool,
    /// Seasonal period in months (even)
    #[arg(long, default_value_t = DEFAULT_PERIOD)]
    pub period: usize,
    /// Mean percentage a component must exceed to be dominant
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    pub threshold: f64,
}

impl OutputArgs {
    fn rounding(&self) -> Rounding {
        if self.full_precision {
            Rounding::FullPrecision
        } else {
            Rounding::DisplayIntegers
        }
    }
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Daily price CSV with `date` and `close` columns
    pub price_file: PathBuf,
    /// Name shown in reports (defaults to the file stem)
    #[arg(long)]
    pub ticker: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FundArgs {
    /// Fund definition JSON
    pub fund_file: PathBuf,
    /// JSON rule table replacing the built-in style profiles
    #[arg(long)]
    pub rules: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// 2 for bad input, 3 for a broken internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn check_threshold(threshold: f64) -> Result<(), CliError> {
    if threshold.is_finite() && threshold > 0.0 {
        Ok(())
    } else {
        Err(CliError::Input(format!("threshold must be > 0, got {threshold}")))
    }
}

fn ticker_for(args: &SeriesArgs) -> String {
    args.ticker.clone().unwrap_or_else(|| {
        args.price_file
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "series".to_owned())
    })
}

/// Runs one command and returns what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Decompose(args) => cmd_decompose(args),
        Command::Summarize(args) => cmd_summarize(args),
        Command::AnalyzeFund(args) => cmd_analyze_fund(args),
    }
}

pub fn cmd_decompose(args: &SeriesArgs) -> Result<String, CliError> {
    let series = load_monthly(&ticker_for(args), &args.price_file).map_err(input)?;
    let d = decompose_with_period(&series, args.output.period).map_err(input)?;
    Ok(render::decomposition(&d, args.output.format, args.output.rounding()))
}

pub fn cmd_summarize(args: &SeriesArgs) -> Result<String, CliError> {
    let out = &args.output;
    check_threshold(out.threshold)?;
    let series = load_monthly(&ticker_for(args), &args.price_file).map_err(input)?;
    let (_, summary) = analyze_series(&series, out.period).map_err(input)?;
    let c = classify_dominant(&summary, out.threshold);
    Ok(render::summary(&summary, &c, out.threshold, out.format, out.rounding()))
}

pub fn cmd_analyze_fund(args: &FundArgs) -> Result<String, CliError> {
    let out = &args.output;
    check_threshold(out.threshold)?;
    let fund = parse_fund_spec(&args.fund_file).map_err(input)?;
    let rules = match &args.rules {
        Some(path) => load_rules(path).map_err(input)?,
        None => default_style_rules(),
    };
    let analysis = analyze_fund(&fund, out.period, out.threshold, &rules, VerdictThresholds::default())
        .map_err(|e| match e.root() {
            PipelineError::StyleCheck(
                StyleCheckError::ClassificationCountMismatch { .. }
                | StyleCheckError::MissingClassification(_),
            ) => CliError::Internal(e.to_string()),
            _ => input(e),
        })?;
    Ok(render::fund(&analysis, out.format, out.rounding()))
}
