//! Component contributions as percentages of the aggregate price.
//!
//! Only positions with a defined trend are used, for all three components, so
//! a 96-month series yields 84 observations per component. The trend mean is
//! signed; the seasonal and random means average magnitudes so that positive
//! and negative months do not cancel.

use serde::Serialize;

use crate::decomposition::Decomposition;

/// Aligned percentage series over the positions where trend is defined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentPercentages {
    /// Index into the decomposed series for each entry.
    pub positions: Vec<usize>,
    pub trend: Vec<f64>,
    pub seasonal: Vec<f64>,
    pub random: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrendStats {
    pub max: f64,
    pub min: f64,
    pub mean: f64,
}

/// Signed extremes plus the mean of absolute values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MagnitudeStats {
    pub max: f64,
    pub min: f64,
    pub mean_abs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentSummary {
    pub ticker: String,
    pub trend: TrendStats,
    pub seasonal: MagnitudeStats,
    pub random: MagnitudeStats,
    pub observation_count: usize,
}

impl ComponentSummary {
    /// `(trend mean, seasonal mean_abs, random mean_abs)`, the values compared
    /// against the dominance threshold.
    pub fn means(&self) -> [f64; 3] {
        [self.trend.mean, self.seasonal.mean_abs, self.random.mean_abs]
    }
}

pub fn component_percentages(d: &Decomposition) -> ComponentPercentages {
    let range = d.defined_range();
    let cap = range.len();
    let mut out = ComponentPercentages {
        positions: Vec::with_capacity(cap),
        trend: Vec::with_capacity(cap),
        seasonal: Vec::with_capacity(cap),
        random: Vec::with_capacity(cap),
    };
    let a = d.aggregate();
    for i in range {
        let (Some(t), Some(r)) = (d.trend()[i], d.random()[i]) else {
            continue;
        };
        out.positions.push(i);
        out.trend.push(100.0 * t / a[i]);
        out.seasonal.push(100.0 * d.seasonal()[i] / a[i]);
        out.random.push(100.0 * r / a[i]);
    }
    out
}

pub fn summarize(d: &Decomposition) -> ComponentSummary {
    let pct = component_percentages(d);
    let (max, min) = extremes(&pct.trend);
    ComponentSummary {
        ticker: d.series().ticker().to_owned(),
        trend: TrendStats {
            max,
            min,
            mean: mean(pct.trend.iter().copied()),
        },
        seasonal: magnitude_stats(&pct.seasonal),
        random: magnitude_stats(&pct.random),
        observation_count: pct.positions.len(),
    }
}

fn magnitude_stats(values: &[f64]) -> MagnitudeStats {
    let (max, min) = extremes(values);
    MagnitudeStats {
        max,
        min,
        mean_abs: mean(values.iter().map(|v| v.abs())),
    }
}

fn extremes(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::NEG_INFINITY, f64::INFINITY), |(hi, lo), &v| {
            (hi.max(v), lo.min(v))
        })
}

fn mean(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len();
    values.sum::<f64>() / n as f64
}
