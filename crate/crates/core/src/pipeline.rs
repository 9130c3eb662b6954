//! End-to-end runs: price file to summary, fund file to consistency report.

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::decomposition::{decompose_with_period, Decomposition, DecompositionError};
use crate::ingest::{aggregate_monthly, parse_daily_csv, FundSpec, IngestError, MonthlySeries};
use crate::stylecheck::{
    check_fund, classify_dominant, ConsistencyReport, DominanceClassification, StyleCheckError,
    StyleRule, VerdictThresholds,
};
use crate::summary::{summarize, ComponentSummary};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    StyleCheck(#[from] StyleCheckError),
    #[error("holding `{ticker}`: {source}")]
    Holding {
        ticker: String,
        #[source]
        source: Box<PipelineError>,
    },
}

impl PipelineError {
    /// Innermost error, skipping holding context.
    pub fn root(&self) -> &PipelineError {
        match self {
            PipelineError::Holding { source, .. } => source.root(),
            other => other,
        }
    }
}

/// Reads a daily price file and averages it into monthly values.
pub fn load_monthly(ticker: &str, path: impl AsRef<Path>) -> Result<MonthlySeries, IngestError> {
    let observations = parse_daily_csv(path)?;
    aggregate_monthly(ticker, &observations)
}

pub fn analyze_series(
    series: &MonthlySeries,
    period: usize,
) -> Result<(Decomposition, ComponentSummary), DecompositionError> {
    let d = decompose_with_period(series, period)?;
    let summary = summarize(&d);
    Ok((d, summary))
}

#[derive(Debug, Clone, Serialize)]
pub struct HoldingAnalysis {
    pub summary: ComponentSummary,
    pub classification: DominanceClassification,
}

#[derive(Debug, Clone, Serialize)]
pub struct FundAnalysis {
    pub threshold: f64,
    /// Fund-file order.
    pub holdings: Vec<HoldingAnalysis>,
    pub report: ConsistencyReport,
}

/// Loads, decomposes and classifies every holding, then checks the fund.
/// Holdings are processed in parallel; output keeps fund-file order.
pub fn analyze_fund(
    fund: &FundSpec,
    period: usize,
    threshold: f64,
    rules: &[StyleRule],
    thresholds: VerdictThresholds,
) -> Result<FundAnalysis, PipelineError> {
    let holdings = fund
        .holdings
        .par_iter()
        .map(|h| {
            let run = || -> Result<HoldingAnalysis, PipelineError> {
                let series = load_monthly(&h.ticker, &h.price_file)?;
                let (_, summary) = analyze_series(&series, period)?;
                let classification = classify_dominant(&summary, threshold);
                Ok(HoldingAnalysis {
                    summary,
                    classification,
                })
            };
            run().map_err(|e| PipelineError::Holding {
                ticker: h.ticker.clone(),
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let classifications: Vec<_> = holdings.iter().map(|h| h.classification.clone()).collect();
    let report = check_fund(fund, &classifications, rules, thresholds)?;
    Ok(FundAnalysis {
        threshold,
        holdings,
        report,
    })
}
