//! Daily price files, fund definition files, and monthly aggregation.

use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use chrono::{Datelike, NaiveDate};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::month::YearMonth;

/// Two full seasonal periods, so every calendar month gets at least one
/// detrended value.
pub const MIN_SERIES_LEN: usize = 24;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("MissingFile {}", .0.display())]
    MissingFile(PathBuf),
    #[error("failed to read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("MissingColumn `{0}` in header")]
    MissingColumn(&'static str),
    #[error("MalformedRow at line {line}: {reason}")]
    MalformedRow { line: u64, reason: String },
    #[error("NonMonotonicDates at line {line}: dates must be strictly increasing")]
    NonMonotonicDates { line: u64 },
    #[error("NonPositivePrice at line {line}: close must be > 0")]
    NonPositivePrice { line: u64 },
    #[error("no price observations")]
    NoObservations,
    #[error("EmptyMonth {}: no observations in this month", YearMonth { year: *.year, month: *.month })]
    EmptyMonth { year: i32, month: u32 },
    #[error("TooShort: {months} months, at least {min} required")]
    TooShort { months: usize, min: usize },
    #[error("invalid monthly value at position {index}: {value} (must be finite and > 0)")]
    InvalidMonthlyValue { index: usize, value: f64 },
    #[error("SchemaError in field `{0}`")]
    SchemaError(String),
    #[error("UnknownEnumValue `{value}` for field `{field}`")]
    UnknownEnumValue { field: String, value: String },
    #[error("DuplicateTicker `{0}`")]
    DuplicateTicker(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DailyObservation {
    pub date: NaiveDate,
    pub close: f64,
}

/// Contiguous monthly mean prices for one stock.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonthlySeries {
    ticker: String,
    start: YearMonth,
    values: Vec<f64>,
}

impl MonthlySeries {
    pub fn new(
        ticker: impl Into<String>,
        start: YearMonth,
        values: Vec<f64>,
    ) -> Result<Self, IngestError> {
        if values.len() < MIN_SERIES_LEN {
            return Err(IngestError::TooShort {
                months: values.len(),
                min: MIN_SERIES_LEN,
            });
        }
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(IngestError::InvalidMonthlyValue { index, value });
        }
        Ok(Self {
            ticker: ticker.into(),
            start,
            values,
        })
    }

    pub fn ticker(&self) -> &str {
        &self.ticker
    }

    pub fn start(&self) -> YearMonth {
        self.start
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn month_at(&self, index: usize) -> YearMonth {
        self.start.offset(index as i64)
    }

    pub fn end(&self) -> YearMonth {
        self.month_at(self.values.len() - 1)
    }

    /// Same months, every value multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self, IngestError> {
        Self::new(
            self.ticker.clone(),
            self.start,
            self.values.iter().map(|v| v * factor).collect(),
        )
    }

    /// Same months, `delta` added to every value.
    pub fn shifted(&self, delta: f64) -> Result<Self, IngestError> {
        Self::new(
            self.ticker.clone(),
            self.start,
            self.values.iter().map(|v| v + delta).collect(),
        )
    }
}

pub fn parse_daily_csv(path: impl AsRef<Path>) -> Result<Vec<DailyObservation>, IngestError> {
    let path = path.as_ref();
    let file = open(path)?;
    parse_daily_reader(file)
}

fn open(path: &Path) -> Result<File, IngestError> {
    File::open(path).map_err(|source| match source.kind() {
        std::io::ErrorKind::NotFound => IngestError::MissingFile(path.to_path_buf()),
        _ => IngestError::Io {
            path: path.to_path_buf(),
            source,
        },
    })
}

/// Reads `date,close` rows. Extra columns are ignored; column order is taken
/// from the header.
pub fn parse_daily_reader<R: Read>(reader: R) -> Result<Vec<DailyObservation>, IngestError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let headers = rdr.headers().map_err(|e| csv_error(e, 1))?.clone();
    let column = |name: &'static str| {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or(IngestError::MissingColumn(name))
    };
    let date_col = column("date")?;
    let close_col = column("close")?;

    let mut out: Vec<DailyObservation> = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        // header is line 1
        let fallback_line = row as u64 + 2;
        let record = record.map_err(|e| csv_error(e, fallback_line))?;
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or(fallback_line);
        if record.iter().all(str::is_empty) {
            continue;
        }

        let field = |idx: usize, name: &str| {
            record
                .get(idx)
                .filter(|s| !s.is_empty())
                .ok_or_else(|| IngestError::MalformedRow {
                    line,
                    reason: format!("missing {name}"),
                })
        };
        let date_text = field(date_col, "date")?;
        let close_text = field(close_col, "close")?;

        let date = NaiveDate::parse_from_str(date_text, "%Y-%m-%d").map_err(|_| {
            IngestError::MalformedRow {
                line,
                reason: format!("date `{date_text}` is not YYYY-MM-DD"),
            }
        })?;
        let close: f64 = close_text.parse().map_err(|_| IngestError::MalformedRow {
            line,
            reason: format!("close `{close_text}` is not a number"),
        })?;
        if !close.is_finite() {
            return Err(IngestError::MalformedRow {
                line,
                reason: format!("close `{close_text}` is not finite"),
            });
        }
        if close <= 0.0 {
            return Err(IngestError::NonPositivePrice { line });
        }
        if let Some(prev) = out.last() {
            if date <= prev.date {
                return Err(IngestError::NonMonotonicDates { line });
            }
        }
        out.push(DailyObservation { date, close });
    }
    Ok(out)
}

fn csv_error(err: csv::Error, fallback_line: u64) -> IngestError {
    let line = err.position().map(|p| p.line()).unwrap_or(fallback_line);
    IngestError::MalformedRow {
        line,
        reason: err.to_string(),
    }
}

/// Averages closes per calendar month. Every month between the first and
/// last observation must have at least one close.
pub fn aggregate_monthly(
    ticker: impl Into<String>,
    observations: &[DailyObservation],
) -> Result<MonthlySeries, IngestError> {
    let mut sorted: Vec<&DailyObservation> = observations.iter().collect();
    sorted.sort_by_key(|o| o.date);
    let (first, last) = match (sorted.first(), sorted.last()) {
        (Some(f), Some(l)) => (month_of(f.date), month_of(l.date)),
        _ => return Err(IngestError::NoObservations),
    };

    let span = first.months_until(last) as usize + 1;
    let mut sums = vec![0.0_f64; span];
    let mut counts = vec![0_usize; span];
    for obs in sorted {
        let idx = first.months_until(month_of(obs.date)) as usize;
        sums[idx] += obs.close;
        counts[idx] += 1;
    }

    if let Some(gap) = counts.iter().position(|&c| c == 0) {
        let m = first.offset(gap as i64);
        return Err(IngestError::EmptyMonth {
            year: m.year,
            month: m.month,
        });
    }

    let values = sums
        .iter()
        .zip(&counts)
        .map(|(s, &c)| s / c as f64)
        .collect();
    MonthlySeries::new(ticker, first, values)
}

fn month_of(date: NaiveDate) -> YearMonth {
    YearMonth::new(date.year(), date.month())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Blend,
    Growth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Capitalization {
    Small,
    Medium,
    Large,
}

impl FromStr for Style {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "blend" => Ok(Style::Blend),
            "growth" => Ok(Style::Growth),
            _ => Err(()),
        }
    }
}

impl FromStr for Capitalization {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "small" => Ok(Capitalization::Small),
            "medium" => Ok(Capitalization::Medium),
            "large" => Ok(Capitalization::Large),
            _ => Err(()),
        }
    }
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Blend => "blend",
            Style::Growth => "growth",
        })
    }
}

impl fmt::Display for Capitalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Capitalization::Small => "small",
            Capitalization::Medium => "medium",
            Capitalization::Large => "large",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Holding {
    pub ticker: String,
    pub price_file: PathBuf,
    pub sector: Option<String>,
    /// Excuses a dominant seasonal component for this holding.
    pub seasonal_whitelisted: bool,
    pub whitelist_reason: Option<String>,
}

impl Holding {
    pub fn new(ticker: impl Into<String>, price_file: impl Into<PathBuf>) -> Self {
        Self {
            ticker: ticker.into(),
            price_file: price_file.into(),
            sector: None,
            seasonal_whitelisted: false,
            whitelist_reason: None,
        }
    }

    pub fn whitelisted(mut self, reason: impl Into<String>) -> Self {
        self.seasonal_whitelisted = true;
        self.whitelist_reason = Some(reason.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FundSpec {
    pub name: String,
    pub style: Style,
    pub capitalization: Capitalization,
    pub sectors: Vec<String>,
    pub holdings: Vec<Holding>,
}

impl FundSpec {
    /// Validates the holding invariants (non-empty, unique tickers).
    pub fn new(
        name: impl Into<String>,
        style: Style,
        capitalization: Capitalization,
        sectors: Vec<String>,
        holdings: Vec<Holding>,
    ) -> Result<Self, IngestError> {
        if holdings.is_empty() {
            return Err(IngestError::SchemaError("holdings".into()));
        }
        let mut seen = HashSet::new();
        for h in &holdings {
            if !seen.insert(h.ticker.as_str()) {
                return Err(IngestError::DuplicateTicker(h.ticker.clone()));
            }
        }
        Ok(Self {
            name: name.into(),
            style,
            capitalization,
            sectors,
            holdings,
        })
    }
}

/// Loads a fund definition. Relative `price_file` entries are resolved
/// against the fund file's directory.
pub fn parse_fund_spec(path: impl AsRef<Path>) -> Result<FundSpec, IngestError> {
    let path = path.as_ref();
    let mut text = String::new();
    open(path)?
        .read_to_string(&mut text)
        .map_err(|source| IngestError::Io {
            path: path.to_path_buf(),
            source,
        })?;
    parse_fund_str(&text, path.parent())
}

pub fn parse_fund_str(text: &str, base_dir: Option<&Path>) -> Result<FundSpec, IngestError> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| IngestError::SchemaError(format!("document: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| IngestError::SchemaError("document".into()))?;

    let name = required_str(obj, "name", "name")?;
    let style_text = required_str(obj, "style", "style")?;
    let style = style_text
        .parse::<Style>()
        .map_err(|_| unknown("style", style_text))?;
    let cap_text = required_str(obj, "capitalization", "capitalization")?;
    let capitalization = cap_text
        .parse::<Capitalization>()
        .map_err(|_| unknown("capitalization", cap_text))?;

    let sectors = match obj.get("sectors") {
        None | Some(Value::Null) => Vec::new(),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_owned)
                    .ok_or_else(|| IngestError::SchemaError("sectors".into()))
            })
            .collect::<Result<_, _>>()?,
        Some(_) => return Err(IngestError::SchemaError("sectors".into())),
    };

    let items = obj
        .get("holdings")
        .and_then(Value::as_array)
        .ok_or_else(|| IngestError::SchemaError("holdings".into()))?;
    let holdings = items
        .iter()
        .enumerate()
        .map(|(i, item)| parse_holding(i, item, base_dir))
        .collect::<Result<Vec<_>, _>>()?;

    FundSpec::new(name, style, capitalization, sectors, holdings)
}

fn parse_holding(i: usize, item: &Value, base_dir: Option<&Path>) -> Result<Holding, IngestError> {
    let field = |name: &str| format!("holdings[{i}].{name}");
    let obj = item
        .as_object()
        .ok_or_else(|| IngestError::SchemaError(format!("holdings[{i}]")))?;
    let ticker = required_str(obj, "ticker", &field("ticker"))?;
    if ticker.trim().is_empty() {
        return Err(IngestError::SchemaError(field("ticker")));
    }
    let file = required_str(obj, "price_file", &field("price_file"))?;
    let mut price_file = PathBuf::from(file);
    if let (true, Some(base)) = (price_file.is_relative(), base_dir) {
        price_file = base.join(price_file);
    }
    let sector = optional_str(obj, "sector", &field("sector"))?;
    let seasonal_whitelisted = match obj.get("seasonal_whitelisted") {
        None | Some(Value::Null) => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(IngestError::SchemaError(field("seasonal_whitelisted"))),
    };
    let whitelist_reason = optional_str(obj, "whitelist_reason", &field("whitelist_reason"))?;

    Ok(Holding {
        ticker: ticker.to_owned(),
        price_file,
        sector,
        seasonal_whitelisted,
        whitelist_reason,
    })
}

type JsonObject = serde_json::Map<String, Value>;

fn required_str<'a>(obj: &'a JsonObject, key: &str, field: &str) -> Result<&'a str, IngestError> {
    obj.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| IngestError::SchemaError(field.to_owned()))
}

fn optional_str(obj: &JsonObject, key: &str, field: &str) -> Result<Option<String>, IngestError> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(_) => Err(IngestError::SchemaError(field.to_owned())),
    }
}

fn unknown(field: &str, value: &str) -> IngestError {
    IngestError::UnknownEnumValue {
        field: field.to_owned(),
        value: value.to_owned(),
    }
}
