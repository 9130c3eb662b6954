//! Text, CSV and JSON renderers.
//!
//! CSV and JSON always carry full-precision values. Only the text renderer
//! honours [`Rounding`].

use std::fmt::Write as _;

use fundstyle_core::{
    ComponentSummary, Decomposition, DominanceClassification, FundAnalysis, MagnitudeStats,
    StockStatus, TrendStats,
};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Half away from zero, matching integer tables.
    DisplayIntegers,
    FullPrecision,
}

pub fn number(value: f64, rounding: Rounding) -> String {
    match rounding {
        Rounding::DisplayIntegers => {
            let r = value.round();
            // no "-0"
            if r == 0.0 {
                "0".to_owned()
            } else {
                format!("{r:.0}")
            }
        }
        Rounding::FullPrecision => format!("{value}"),
    }
}

fn optional(value: Option<f64>, rounding: Rounding) -> String {
    value.map(|v| number(v, rounding)).unwrap_or_default()
}

#[derive(Clone, Copy, PartialEq)]
enum Align {
    Left,
    Right,
}

/// Fixed-width table; widths fit the widest cell in each column.
struct TextTable {
    align: Vec<Align>,
    /// Column indices preceded by a ` | ` separator.
    breaks: Vec<usize>,
    /// Titles spanning from a column to the next group or break.
    groups: Vec<(usize, String)>,
    rows: Vec<Vec<String>>,
}

impl TextTable {
    fn new(align: Vec<Align>, breaks: Vec<usize>) -> Self {
        Self {
            align,
            breaks,
            groups: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn group(&mut self, column: usize, title: &str) {
        self.groups.push((column, title.to_owned()));
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.align.len());
        self.rows.push(row);
    }

    fn separator(&self, column: usize) -> &'static str {
        if self.breaks.contains(&column) {
            " | "
        } else {
            "  "
        }
    }

    fn render(&self, out: &mut String) {
        let ncols = self.align.len();
        let mut widths: Vec<usize> = (0..ncols)
            .map(|c| self.rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();

        // widen the last column of a group when its title does not fit
        let mut spans = Vec::new();
        for (k, (start, title)) in self.groups.iter().enumerate() {
            let end = self
                .groups
                .get(k + 1)
                .map(|g| g.0)
                .into_iter()
                .chain(self.breaks.iter().copied().filter(|b| b > start))
                .min()
                .unwrap_or(ncols);
            let span = |w: &[usize]| {
                (*start..end)
                    .map(|c| w[c] + if c > *start { self.separator(c).len() } else { 0 })
                    .sum::<usize>()
            };
            let have = span(&widths);
            let need = title.chars().count();
            if need > have {
                widths[end - 1] += need - have;
            }
            spans.push((*start, end, span(&widths)));
        }

        if !self.groups.is_empty() {
            let mut line = String::new();
            let mut c = 0;
            while c < ncols {
                if c > 0 {
                    line.push_str(self.separator(c));
                }
                if let Some(k) = self.groups.iter().position(|g| g.0 == c) {
                    let (_, end, width) = spans[k];
                    write!(line, "{:<width$}", self.groups[k].1).unwrap();
                    c = end;
                } else {
                    line.push_str(&" ".repeat(widths[c]));
                    c += 1;
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }

        for row in &self.rows {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    line.push_str(self.separator(c));
                }
                let w = widths[c];
                match self.align[c] {
                    Align::Left => write!(line, "{cell:<w$}").unwrap(),
                    Align::Right => write!(line, "{cell:>w$}").unwrap(),
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
}

pub fn decomposition(d: &Decomposition, format: Format, rounding: Rounding) -> String {
    match format {
        Format::Text => decomposition_text(d, rounding),
        Format::Csv => decomposition_csv(d),
        Format::Json => to_json(&decomposition_json(d)),
    }
}

fn decomposition_text(d: &Decomposition, rounding: Rounding) -> String {
    use Align::*;
    let mut table = TextTable::new(vec![Left, Left, Right, Right, Right, Right], vec![]);
    table.push(
        ["Year", "Month", "Aggregate", "Trend", "Seasonal", "Random"]
            .map(String::from)
            .to_vec(),
    );
    for i in 0..d.len() {
        let m = d.month_at(i);
        table.push(vec![
            m.year.to_string(),
            m.month_name().to_owned(),
            number(d.aggregate()[i], rounding),
            optional(d.trend()[i], rounding),
            number(d.seasonal()[i], rounding),
            optional(d.random()[i], rounding),
        ]);
    }
    let mut out = String::new();
    table.render(&mut out);
    out
}

fn csv_number(value: f64) -> String {
    number(value, Rounding::FullPrecision)
}

fn decomposition_csv(d: &Decomposition) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["month", "aggregate", "trend", "seasonal", "random"])
        .unwrap();
    for i in 0..d.len() {
        w.write_record([
            d.month_at(i).to_string(),
            csv_number(d.aggregate()[i]),
            d.trend()[i].map(csv_number).unwrap_or_default(),
            csv_number(d.seasonal()[i]),
            d.random()[i].map(csv_number).unwrap_or_default(),
        ])
        .unwrap();
    }
    finish_csv(w)
}

fn decomposition_json(d: &Decomposition) -> serde_json::Value {
    let rows: Vec<_> = (0..d.len())
        .map(|i| {
            json!({
                "month": d.month_at(i).to_string(),
                "aggregate": d.aggregate()[i],
                "trend": d.trend()[i],
                "seasonal": d.seasonal()[i],
                "random": d.random()[i],
            })
        })
        .collect();
    json!({
        "ticker": d.series().ticker(),
        "period": d.period(),
        "start": d.series().start().to_string(),
        "seasonal_figures": d.seasonal_figures(),
        "rows": rows,
    })
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    ticker: &'a str,
    observation_count: usize,
    trend: &'a TrendStats,
    seasonal: &'a MagnitudeStats,
    random: &'a MagnitudeStats,
    dominant: &'a [fundstyle_core::Component],
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<StockStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

impl<'a> SummaryJson<'a> {
    fn new(s: &'a ComponentSummary, c: &'a DominanceClassification) -> Self {
        Self {
            ticker: &s.ticker,
            observation_count: s.observation_count,
            trend: &s.trend,
            seasonal: &s.seasonal,
            random: &s.random,
            dominant: &c.ordered,
            status: None,
            note: None,
        }
    }
}

pub fn summary(
    s: &ComponentSummary,
    c: &DominanceClassification,
    threshold: f64,
    format: Format,
    rounding: Rounding,
) -> String {
    match format {
        Format::Text => {
            let mut table = summary_table(false);
            table.push(summary_cells(s, c, rounding));
            let mut out = String::new();
            table.render(&mut out);
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(summary_csv_header(false)).unwrap();
            w.write_record(summary_csv_cells(s, c)).unwrap();
            finish_csv(w)
        }
        Format::Json => {
            let body = serde_json::to_value(SummaryJson::new(s, c)).unwrap();
            let mut obj = json!({ "threshold": threshold });
            obj.as_object_mut()
                .unwrap()
                .extend(body.as_object().unwrap().clone());
            to_json(&obj)
        }
    }
}

fn summary_table(with_status: bool) -> TextTable {
    use Align::*;
    let mut align = vec![Left];
    align.extend([Right; 9]);
    align.push(Left);
    let mut breaks = vec![4, 7, 10];
    if with_status {
        align.push(Left);
        breaks.push(11);
    }
    let mut table = TextTable::new(align, breaks);

    table.group(1, "Trend (T)");
    table.group(4, "Seasonal (S)");
    table.group(7, "Random (R)");
    let mut labels = vec!["Stock", "Max", "Min", "Mean", "Max", "Min", "Mean", "Max", "Min", "Mean", "Dominant"];
    if with_status {
        labels.push("Status");
    }
    table.push(labels.into_iter().map(String::from).collect());
    table
}

fn summary_cells(s: &ComponentSummary, c: &DominanceClassification, r: Rounding) -> Vec<String> {
    vec![
        s.ticker.clone(),
        number(s.trend.max, r),
        number(s.trend.min, r),
        number(s.trend.mean, r),
        number(s.seasonal.max, r),
        number(s.seasonal.min, r),
        number(s.seasonal.mean_abs, r),
        number(s.random.max, r),
        number(s.random.min, r),
        number(s.random.mean_abs, r),
        dominant_label(c),
    ]
}

fn dominant_label(c: &DominanceClassification) -> String {
    if c.ordered.is_empty() {
        "-".to_owned()
    } else {
        c.label()
    }
}

fn summary_csv_header(with_status: bool) -> Vec<&'static str> {
    let mut h = vec![
        "ticker",
        "observation_count",
        "trend_max",
        "trend_min",
        "trend_mean",
        "seasonal_max",
        "seasonal_min",
        "seasonal_mean_abs",
        "random_max",
        "random_min",
        "random_mean_abs",
        "dominant",
    ];
    if with_status {
        h.push("status");
    }
    h
}

fn summary_csv_cells(s: &ComponentSummary, c: &DominanceClassification) -> Vec<String> {
    vec![
        s.ticker.clone(),
        s.observation_count.to_string(),
        csv_number(s.trend.max),
        csv_number(s.trend.min),
        csv_number(s.trend.mean),
        csv_number(s.seasonal.max),
        csv_number(s.seasonal.min),
        csv_number(s.seasonal.mean_abs),
        csv_number(s.random.max),
        csv_number(s.random.min),
        csv_number(s.random.mean_abs),
        c.label(),
    ]
}

pub fn fund(analysis: &FundAnalysis, format: Format, rounding: Rounding) -> String {
    let report = &analysis.report;
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "Fund: {} (style {}, capitalization {})",
                report.fund, report.style, report.capitalization
            )
            .unwrap();
            writeln!(
                out,
                "Profile: required {}, tolerated {}, flagged {}",
                report.rule.required, report.rule.tolerated, report.rule.flagged
            )
            .unwrap();
            writeln!(out, "Dominance threshold: {}", analysis.threshold).unwrap();
            out.push('\n');

            let mut table = summary_table(true);
            for (h, a) in analysis.holdings.iter().zip(&report.per_stock) {
                let mut cells = summary_cells(&h.summary, &h.classification, rounding);
                cells.push(a.status.to_string());
                table.push(cells);
            }
            table.render(&mut out);
            out.push('\n');

            for a in &report.per_stock {
                match a.status {
                    StockStatus::Deviation => {
                        let mut reasons = Vec::new();
                        if !a.missing.is_empty() {
                            reasons.push(format!("missing {}", a.missing));
                        }
                        if !a.unexpected.is_empty() {
                            reasons.push(format!("unexpected {}", a.unexpected));
                        }
                        writeln!(out, "deviation: {} ({})", a.ticker, reasons.join(", ")).unwrap();
                    }
                    StockStatus::Whitelisted => {
                        let note = a.note.as_deref().unwrap_or("seasonal component excused");
                        writeln!(out, "whitelisted: {} ({note})", a.ticker).unwrap();
                    }
                    StockStatus::Consistent => {}
                }
            }
            writeln!(
                out,
                "Deviations: {} of {}",
                report.deviation_count,
                report.per_stock.len()
            )
            .unwrap();
            writeln!(out, "Verdict: {}", report.verdict).unwrap();
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(summary_csv_header(true)).unwrap();
            for (h, a) in analysis.holdings.iter().zip(&report.per_stock) {
                let mut cells = summary_csv_cells(&h.summary, &h.classification);
                cells.push(a.status.to_string());
                w.write_record(cells).unwrap();
            }
            finish_csv(w)
        }
        Format::Json => {
            let per_stock: Vec<_> = analysis
                .holdings
                .iter()
                .zip(&report.per_stock)
                .map(|(h, a)| SummaryJson {
                    status: Some(a.status),
                    note: a.note.as_deref(),
                    ..SummaryJson::new(&h.summary, &h.classification)
                })
                .collect();
            to_json(&json!({
                "fund": report.fund,
                "style": report.style,
                "capitalization": report.capitalization,
                "threshold": analysis.threshold,
                "rule": report.rule,
                "per_stock": per_stock,
                "deviation_count": report.deviation_count,
                "verdict": report.verdict,
            }))
        }
    }
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 cells")
}

fn to_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}
