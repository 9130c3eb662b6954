#![allow(dead_code)]

use std::path::{Path, PathBuf};

use fundstyle_core::{Component, ComponentSet, MonthlySeries, YearMonth};
use serde::Deserialize;

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

/// One month of the published HDFC Bank component table. Blank cells are `None`.
#[derive(Debug, Clone, Deserialize)]
pub struct ComponentRow {
    pub year: i32,
    pub month: u32,
    pub aggregate: f64,
    pub trend: Option<f64>,
    pub seasonal: f64,
    pub random: Option<f64>,
}

impl ComponentRow {
    pub fn month(&self) -> YearMonth {
        YearMonth::new(self.year, self.month)
    }
}

pub fn hdfc_rows() -> Vec<ComponentRow> {
    read_csv("hdfc_components.csv")
}

pub fn hdfc_series() -> MonthlySeries {
    let rows = hdfc_rows();
    MonthlySeries::new(
        "HDFC Bank",
        rows[0].month(),
        rows.iter().map(|r| r.aggregate).collect(),
    )
    .unwrap()
}

/// One stock row of a published fund summary.
#[derive(Debug, Clone, Deserialize)]
pub struct SummaryRow {
    pub fund: u32,
    pub stock: String,
    pub trend_max: f64,
    pub trend_min: f64,
    pub trend_mean: f64,
    pub seasonal_max: f64,
    pub seasonal_min: f64,
    pub seasonal_mean: f64,
    pub random_max: f64,
    pub random_min: f64,
    pub random_mean: f64,
    pub dominant: String,
}

impl SummaryRow {
    pub fn means(&self) -> [f64; 3] {
        [self.trend_mean, self.seasonal_mean, self.random_mean]
    }

    pub fn printed_dominant(&self) -> ComponentSet {
        self.dominant
            .split('+')
            .map(|c| c.trim().parse::<Component>().unwrap())
            .collect()
    }
}

pub fn summary_rows() -> Vec<SummaryRow> {
    read_csv("fund_summaries.csv")
}

fn read_csv<T: for<'de> Deserialize<'de>>(name: &str) -> Vec<T> {
    csv::Reader::from_path(fixture(name))
        .unwrap()
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap()
}

/// Prints one status line and panics with the collected failures.
pub fn criterion(id: u32, name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {id} [PASS] {name}");
    } else {
        println!("criterion {id} [FAIL] {name}");
        for f in &failures {
            println!("    - {f}");
        }
        panic!("criterion {id} failed: {}", failures.join("; "));
    }
}

pub struct PublishedFund {
    pub fund: u32,
    pub name: &'static str,
    pub style: fundstyle_core::Style,
    pub capitalization: fundstyle_core::Capitalization,
}

pub const PUBLISHED_FUNDS: [PublishedFund; 8] = {
    use fundstyle_core::Capitalization::*;
    use fundstyle_core::Style::*;
    [
        PublishedFund { fund: 1, name: "UTI Infrastructure Fund", style: Blend, capitalization: Medium },
        PublishedFund { fund: 2, name: "ICICI Prudential Infrastructure Fund", style: Blend, capitalization: Medium },
        PublishedFund { fund: 3, name: "Axis Midcap Fund", style: Growth, capitalization: Medium },
        PublishedFund { fund: 4, name: "ICICI Prudential Value Discovery Fund", style: Blend, capitalization: Large },
        PublishedFund { fund: 5, name: "ICICI Prudential Focused Bluechip Equity Fund", style: Growth, capitalization: Large },
        PublishedFund { fund: 6, name: "UTI Long Term Equity Fund", style: Growth, capitalization: Large },
        PublishedFund { fund: 7, name: "Reliance Small Cap Fund", style: Growth, capitalization: Small },
        PublishedFund { fund: 8, name: "UTI Bluechip Flexicap Fund", style: Growth, capitalization: Large },
    ]
};

pub const WHITELISTED: &str = "Container Corporation";

/// Fund spec for one published fund plus classifications of its printed means.
pub fn published_fund(
    fund: &PublishedFund,
    rows: &[SummaryRow],
    threshold: f64,
) -> (
    fundstyle_core::FundSpec,
    Vec<fundstyle_core::DominanceClassification>,
) {
    use fundstyle_core::{DominanceClassification, FundSpec, Holding};

    let rows: Vec<&SummaryRow> = rows.iter().filter(|r| r.fund == fund.fund).collect();
    let holdings = rows
        .iter()
        .map(|r| {
            let h = Holding::new(r.stock.clone(), format!("{}.csv", r.stock));
            if r.stock == WHITELISTED {
                h.whitelisted("logistics provider supporting infrastructure development")
            } else {
                h
            }
        })
        .collect();
    let spec = FundSpec::new(fund.name, fund.style, fund.capitalization, vec![], holdings).unwrap();
    let classes = rows
        .iter()
        .map(|r| DominanceClassification::from_means(r.stock.clone(), r.means(), threshold))
        .collect();
    (spec, classes)
}
