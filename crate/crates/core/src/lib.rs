//! Additive seasonal decomposition of monthly stock prices, component
//! percentage summaries, and mutual fund style consistency checks.
//!
//! The pipeline is:
//!
//! 1. [`ingest`] reads daily closes and averages them into a [`MonthlySeries`].
//! 2. [`decomposition`] splits the series into trend, seasonal and random parts.
//! 3. [`summary`] expresses each component as a percentage of the aggregate
//!    and reduces it to max/min/mean statistics.
//! 4. [`stylecheck`] marks components whose mean exceeds a dominance
//!    threshold and compares holdings against the fund's declared style.
//!
//! [`pipeline`] wires these steps together for a single stock or a whole fund.

pub mod decomposition;
pub mod ingest;
pub mod month;
pub mod pipeline;
pub mod stylecheck;
pub mod summary;

pub use decomposition::{
    centered_ma_trend, decompose, decompose_with_period, seasonal_figures, Decomposition,
    DecompositionError, DEFAULT_PERIOD,
};
pub use ingest::{
    aggregate_monthly, parse_daily_csv, parse_daily_reader, parse_fund_spec, parse_fund_str,
    Capitalization, DailyObservation, FundSpec, Holding, IngestError, MonthlySeries, Style,
    MIN_SERIES_LEN,
};
pub use month::YearMonth;
pub use pipeline::{analyze_fund, analyze_series, FundAnalysis, HoldingAnalysis, PipelineError};
pub use stylecheck::{
    check_fund, check_stock, classify_dominant, default_style_rules, find_rule, load_rules,
    parse_rules, Component, ComponentSet, ConsistencyReport, DominanceClassification, RuleError,
    StockAssessment, StockStatus, StyleCheckError, StyleRule, Verdict, VerdictThresholds,
    DEFAULT_THRESHOLD,
};
pub use summary::{
    component_percentages, summarize, ComponentPercentages, ComponentSummary, MagnitudeStats,
    TrendStats,
};
