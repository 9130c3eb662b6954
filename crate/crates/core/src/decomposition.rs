//! Classical additive decomposition: `aggregate = trend + seasonal + random`.
//!
//! The trend is a centered moving average over one full period. For the even
//! periods used here (12 months) the window spans `period + 1` months with the
//! two outermost months weighted by one half, so the window stays centered on
//! the month it describes. The first and last `period / 2` months therefore
//! have no trend and no random component.
//!
//! Seasonal figures are the per-month means of the detrended series, shifted
//! so they sum to zero. Months are keyed by calendar position, not by offset
//! from the first observation, so a series starting in April still assigns its
//! first figure to April.

use serde::Serialize;
use thiserror::Error;

use crate::ingest::MonthlySeries;
use crate::month::YearMonth;

pub const DEFAULT_PERIOD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("InvalidPeriod {0}: period must be even and at least 2")]
    InvalidPeriod(usize),
    #[error("SeriesTooShort: {len} values, a period of {period} needs at least {required}")]
    SeriesTooShort {
        len: usize,
        period: usize,
        required: usize,
    },
    #[error("NoDataForMonth {0}: no detrended value for this seasonal position")]
    NoDataForMonth(usize),
    #[error("trend has {trend} entries but the series has {series}")]
    LengthMismatch { series: usize, trend: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decomposition {
    series: MonthlySeries,
    period: usize,
    trend: Vec<Option<f64>>,
    seasonal_figures: Vec<f64>,
    seasonal: Vec<f64>,
    random: Vec<Option<f64>>,
}

impl Decomposition {
    /// The aggregate series.
    pub fn series(&self) -> &MonthlySeries {
        &self.series
    }

    pub fn aggregate(&self) -> &[f64] {
        self.series.values()
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn trend(&self) -> &[Option<f64>] {
        &self.trend
    }

    /// One figure per seasonal position. For a 12-month period index 0 is
    /// January.
    pub fn seasonal_figures(&self) -> &[f64] {
        &self.seasonal_figures
    }

    pub fn seasonal(&self) -> &[f64] {
        &self.seasonal
    }

    pub fn random(&self) -> &[Option<f64>] {
        &self.random
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    pub fn month_at(&self, index: usize) -> YearMonth {
        self.series.month_at(index)
    }

    /// Positions where trend (and random) are defined.
    pub fn defined_range(&self) -> std::ops::Range<usize> {
        let half = self.period / 2;
        half..self.len() - half
    }
}

/// Seasonal slot of `month` for the given period. For period 12 this is the
/// calendar month index; otherwise months are counted from a fixed epoch so
/// the slot does not depend on where the series starts.
pub fn seasonal_position(month: YearMonth, period: usize) -> usize {
    month.ordinal().rem_euclid(period as i64) as usize
}

fn check_period(len: usize, period: usize) -> Result<(), DecompositionError> {
    if period < 2 || !period.is_multiple_of(2) {
        return Err(DecompositionError::InvalidPeriod(period));
    }
    if len < period + 1 {
        return Err(DecompositionError::SeriesTooShort {
            len,
            period,
            required: period + 1,
        });
    }
    Ok(())
}

/// Centered `2 x period` moving average. Entries within `period / 2` of either
/// end are `None`.
pub fn centered_ma_trend(
    values: &[f64],
    period: usize,
) -> Result<Vec<Option<f64>>, DecompositionError> {
    check_period(values.len(), period)?;
    let half = period / 2;
    let n = values.len();
    let p = period as f64;

    let trend = (0..n)
        .map(|i| {
            if i < half || i + half >= n {
                return None;
            }
            let inner: f64 = values[i + 1 - half..i + half].iter().sum();
            let edges = 0.5 * (values[i - half] + values[i + half]);
            Some((inner + edges) / p)
        })
        .collect();
    Ok(trend)
}

/// Per-position means of `aggregate - trend`, centered to sum to zero.
pub fn seasonal_figures(
    series: &MonthlySeries,
    trend: &[Option<f64>],
    period: usize,
) -> Result<Vec<f64>, DecompositionError> {
    check_period(series.len(), period)?;
    if trend.len() != series.len() {
        return Err(DecompositionError::LengthMismatch {
            series: series.len(),
            trend: trend.len(),
        });
    }

    let mut sums = vec![0.0; period];
    let mut counts = vec![0usize; period];
    for (i, (a, t)) in series.values().iter().zip(trend).enumerate() {
        if let Some(t) = t {
            let slot = seasonal_position(series.month_at(i), period);
            sums[slot] += a - t;
            counts[slot] += 1;
        }
    }

    if let Some(slot) = counts.iter().position(|&c| c == 0) {
        return Err(DecompositionError::NoDataForMonth(slot + 1));
    }

    let raw: Vec<f64> = sums
        .iter()
        .zip(&counts)
        .map(|(s, &c)| s / c as f64)
        .collect();
    let mean = raw.iter().sum::<f64>() / period as f64;
    Ok(raw.into_iter().map(|r| r - mean).collect())
}

pub fn decompose(series: &MonthlySeries) -> Result<Decomposition, DecompositionError> {
    decompose_with_period(series, DEFAULT_PERIOD)
}

pub fn decompose_with_period(
    series: &MonthlySeries,
    period: usize,
) -> Result<Decomposition, DecompositionError> {
    let trend = centered_ma_trend(series.values(), period)?;
    let figures = seasonal_figures(series, &trend, period)?;

    let seasonal: Vec<f64> = (0..series.len())
        .map(|i| figures[seasonal_position(series.month_at(i), period)])
        .collect();
    let random = series
        .values()
        .iter()
        .zip(&trend)
        .zip(&seasonal)
        .map(|((a, t), s)| t.map(|t| a - t - s))
        .collect();

    Ok(Decomposition {
        series: series.clone(),
        period,
        trend,
        seasonal_figures: figures,
        seasonal,
        random,
    })
}
