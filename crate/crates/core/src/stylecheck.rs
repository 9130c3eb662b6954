//! Dominant-component classification and fund style consistency.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{Capitalization, FundSpec, Style};
use crate::summary::ComponentSummary;

/// A component is dominant when its mean percentage strictly exceeds this.
pub const DEFAULT_THRESHOLD: f64 = 15.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    Trend,
    Seasonal,
    Random,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::Trend, Component::Seasonal, Component::Random];

    pub fn letter(self) -> &'static str {
        match self {
            Component::Trend => "T",
            Component::Seasonal => "S",
            Component::Random => "R",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Component {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "t" | "trend" => Ok(Component::Trend),
            "s" | "seasonal" => Ok(Component::Seasonal),
            "r" | "random" => Ok(Component::Random),
            other => Err(format!("unknown component `{other}`")),
        }
    }
}

impl Serialize for Component {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.letter())
    }
}

impl<'de> Deserialize<'de> for Component {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Subset of {T, S, R}.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ComponentSet(u8);

impl ComponentSet {
    pub const EMPTY: ComponentSet = ComponentSet(0);
    pub const ALL: ComponentSet = ComponentSet(0b111);

    pub fn contains(self, c: Component) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn insert(&mut self, c: Component) {
        self.0 |= c.bit();
    }

    pub fn with(mut self, c: Component) -> Self {
        self.insert(c);
        self
    }

    pub fn remove(&mut self, c: Component) {
        self.0 &= !c.bit();
    }

    pub fn union(self, other: Self) -> Self {
        ComponentSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ComponentSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ComponentSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in T, S, R order.
    pub fn iter(self) -> impl Iterator<Item = Component> {
        Component::ALL.into_iter().filter(move |c| self.contains(*c))
    }
}

impl FromIterator<Component> for ComponentSet {
    fn from_iter<I: IntoIterator<Item = Component>>(iter: I) -> Self {
        let mut set = ComponentSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

/// `{T, R}`; `{}` when empty.
impl fmt::Display for ComponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<_> = self.iter().map(Component::letter).collect();
        write!(f, "{{{}}}", letters.join(", "))
    }
}

impl Serialize for ComponentSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for c in self.iter() {
            seq.serialize_element(&c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ComponentSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<Component>::deserialize(d)?;
        Ok(items.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceClassification {
    pub ticker: String,
    pub dominant: ComponentSet,
    /// Dominant components by descending mean; ties keep T, S, R order.
    pub ordered: Vec<Component>,
}

impl DominanceClassification {
    /// Classifies raw `(trend mean, seasonal mean_abs, random mean_abs)`.
    pub fn from_means(ticker: impl Into<String>, means: [f64; 3], threshold: f64) -> Self {
        let mut ranked: Vec<(Component, f64)> = Component::ALL
            .into_iter()
            .zip(means)
            .filter(|(_, m)| *m > threshold)
            .collect();
        // stable sort keeps T, S, R order on ties
        ranked.sort_by(|a, b| b.1.total_cmp(&a.1));
        let ordered: Vec<Component> = ranked.into_iter().map(|(c, _)| c).collect();
        Self {
            ticker: ticker.into(),
            dominant: ordered.iter().copied().collect(),
            ordered,
        }
    }

    /// e.g. `T + R + S`
    pub fn label(&self) -> String {
        self.ordered
            .iter()
            .map(|c| c.letter())
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn classify_dominant(summary: &ComponentSummary, threshold: f64) -> DominanceClassification {
    DominanceClassification::from_means(summary.ticker.clone(), summary.means(), threshold)
}

#[derive(Debug, Error)]
pub enum RuleError {
    #[error("rule for ({style}, {capitalization}): required, tolerated and flagged must partition {{T, S, R}}")]
    NotPartition {
        style: Style,
        capitalization: Capitalization,
    },
    #[error("more than one rule for ({style}, {capitalization})")]
    DuplicateRule {
        style: Style,
        capitalization: Capitalization,
    },
    #[error("MissingFile {0}")]
    MissingFile(String),
    #[error("failed to read rules file: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid rules file: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Expected dominance profile for one (style, capitalization) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StyleRule {
    pub style: Style,
    pub capitalization: Capitalization,
    /// Must be dominant.
    pub required: ComponentSet,
    /// May or may not be dominant.
    pub tolerated: ComponentSet,
    /// Must not be dominant.
    pub flagged: ComponentSet,
}

impl StyleRule {
    pub fn new(
        style: Style,
        capitalization: Capitalization,
        required: ComponentSet,
        tolerated: ComponentSet,
        flagged: ComponentSet,
    ) -> Result<Self, RuleError> {
        let rule = Self {
            style,
            capitalization,
            required,
            tolerated,
            flagged,
        };
        rule.validate()?;
        Ok(rule)
    }

    pub fn validate(&self) -> Result<(), RuleError> {
        let disjoint = self.required.intersection(self.tolerated).is_empty()
            && self.required.intersection(self.flagged).is_empty()
            && self.tolerated.intersection(self.flagged).is_empty();
        let covers = self.required.union(self.tolerated).union(self.flagged) == ComponentSet::ALL;
        if disjoint && covers {
            Ok(())
        } else {
            Err(RuleError::NotPartition {
                style: self.style,
                capitalization: self.capitalization,
            })
        }
    }
}

fn set(components: &[Component]) -> ComponentSet {
    components.iter().copied().collect()
}

/// Built-in profiles:
///
/// | style  | cap    | required | tolerated | flagged |
/// |--------|--------|----------|-----------|---------|
/// | blend  | medium | T        | R         | S       |
/// | growth | medium | T        | R         | S       |
/// | blend  | large  | T        | R, S      |         |
/// | growth | large  | T        | R         | S       |
/// | growth | small  | R        | T, S      |         |
/// | blend  | small  | R        | T, S      |         |
pub fn default_style_rules() -> Vec<StyleRule> {
    use Capitalization::*;
    use Component::*;
    use Style::*;

    let rule = |style, cap, req: &[Component], tol: &[Component], flag: &[Component]| {
        StyleRule::new(style, cap, set(req), set(tol), set(flag))
            .expect("built-in rules partition {T, S, R}")
    };
    vec![
        rule(Blend, Medium, &[Trend], &[Random], &[Seasonal]),
        rule(Growth, Medium, &[Trend], &[Random], &[Seasonal]),
        rule(Blend, Large, &[Trend], &[Random, Seasonal], &[]),
        rule(Growth, Large, &[Trend], &[Random], &[Seasonal]),
        rule(Growth, Small, &[Random], &[Trend, Seasonal], &[]),
        rule(Blend, Small, &[Random], &[Trend, Seasonal], &[]),
    ]
}

pub fn find_rule(
    rules: &[StyleRule],
    style: Style,
    capitalization: Capitalization,
) -> Option<&StyleRule> {
    rules
        .iter()
        .find(|r| r.style == style && r.capitalization == capitalization)
}

/// Parses a JSON array of rules and checks each one.
pub fn parse_rules(text: &str) -> Result<Vec<StyleRule>, RuleError> {
    let rules: Vec<StyleRule> = serde_json::from_str(text)?;
    for (i, rule) in rules.iter().enumerate() {
        rule.validate()?;
        if find_rule(&rules[..i], rule.style, rule.capitalization).is_some() {
            return Err(RuleError::DuplicateRule {
                style: rule.style,
                capitalization: rule.capitalization,
            });
        }
    }
    Ok(rules)
}

pub fn load_rules(path: impl AsRef<Path>) -> Result<Vec<StyleRule>, RuleError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => RuleError::MissingFile(path.display().to_string()),
        _ => RuleError::Io(e),
    })?;
    parse_rules(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StockStatus {
    Consistent,
    Deviation,
    /// The only violation was a seasonal component excused for this holding.
    Whitelisted,
}

impl fmt::Display for StockStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StockStatus::Consistent => "consistent",
            StockStatus::Deviation => "deviation",
            StockStatus::Whitelisted => "whitelisted",
        })
    }
}

pub fn check_stock(
    classification: &DominanceClassification,
    rule: &StyleRule,
    whitelisted: bool,
) -> StockStatus {
    let missing = rule.required.difference(classification.dominant);
    let mut unexpected = rule.flagged.intersection(classification.dominant);
    let excused = whitelisted && unexpected.contains(Component::Seasonal);
    if excused {
        unexpected.remove(Component::Seasonal);
    }
    if !missing.is_empty() || !unexpected.is_empty() {
        StockStatus::Deviation
    } else if excused {
        StockStatus::Whitelisted
    } else {
        StockStatus::Consistent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    ConsistentWithDeviations,
    Inconsistent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::ConsistentWithDeviations => "consistent_with_deviations",
            Verdict::Inconsistent => "inconsistent",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerdictThresholds {
    /// At most this many deviations still counts as fully consistent.
    pub zero_bound: usize,
    /// Largest deviation share of holdings that is still mostly consistent.
    pub ratio_bound: f64,
}

impl Default for VerdictThresholds {
    fn default() -> Self {
        Self {
            zero_bound: 0,
            ratio_bound: 0.30,
        }
    }
}

impl VerdictThresholds {
    pub fn verdict(&self, deviations: usize, holdings: usize) -> Verdict {
        if deviations <= self.zero_bound {
            Verdict::Consistent
        } else if deviations as f64 / holdings as f64 <= self.ratio_bound {
            Verdict::ConsistentWithDeviations
        } else {
            Verdict::Inconsistent
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StockAssessment {
    pub ticker: String,
    pub classification: DominanceClassification,
    pub status: StockStatus,
    /// Required components that are not dominant.
    pub missing: ComponentSet,
    /// Flagged components that are dominant, including excused ones.
    pub unexpected: ComponentSet,
    /// Whitelist rationale carried from the fund file.
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub fund: String,
    pub style: Style,
    pub capitalization: Capitalization,
    pub rule: StyleRule,
    pub per_stock: Vec<StockAssessment>,
    pub deviation_count: usize,
    pub verdict: Verdict,
}

impl ConsistencyReport {
    pub fn deviations(&self) -> impl Iterator<Item = &str> {
        self.per_stock
            .iter()
            .filter(|s| s.status == StockStatus::Deviation)
            .map(|s| s.ticker.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StyleCheckError {
    #[error("NoRuleForStyle ({0}, {1})")]
    NoRuleForStyle(Style, Capitalization),
    #[error("ClassificationCountMismatch: {holdings} holdings, {classifications} classifications")]
    ClassificationCountMismatch {
        holdings: usize,
        classifications: usize,
    },
    #[error("no classification for holding `{0}`")]
    MissingClassification(String),
}

/// Assesses every holding in fund-file order. Classifications are matched to
/// holdings by ticker.
pub fn check_fund(
    fund: &FundSpec,
    classifications: &[DominanceClassification],
    rules: &[StyleRule],
    thresholds: VerdictThresholds,
) -> Result<ConsistencyReport, StyleCheckError> {
    let rule = find_rule(rules, fund.style, fund.capitalization)
        .ok_or(StyleCheckError::NoRuleForStyle(fund.style, fund.capitalization))?;
    if classifications.len() != fund.holdings.len() {
        return Err(StyleCheckError::ClassificationCountMismatch {
            holdings: fund.holdings.len(),
            classifications: classifications.len(),
        });
    }

    let per_stock = fund
        .holdings
        .iter()
        .map(|h| {
            let c = classifications
                .iter()
                .find(|c| c.ticker == h.ticker)
                .ok_or_else(|| StyleCheckError::MissingClassification(h.ticker.clone()))?;
            let status = check_stock(c, rule, h.seasonal_whitelisted);
            Ok(StockAssessment {
                ticker: h.ticker.clone(),
                classification: c.clone(),
                status,
                missing: rule.required.difference(c.dominant),
                unexpected: rule.flagged.intersection(c.dominant),
                note: match status {
                    StockStatus::Whitelisted => h.whitelist_reason.clone(),
                    _ => None,
                },
            })
        })
        .collect::<Result<Vec<_>, StyleCheckError>>()?;

    let deviation_count = per_stock
        .iter()
        .filter(|s| s.status == StockStatus::Deviation)
        .count();
    Ok(ConsistencyReport {
        fund: fund.name.clone(),
        style: fund.style,
        capitalization: fund.capitalization,
        rule: rule.clone(),
        verdict: thresholds.verdict(deviation_count, fund.holdings.len()),
        per_stock,
        deviation_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::Holding;
    use proptest::prelude::*;
    use Component::*;

    fn classify(means: [f64; 3]) -> DominanceClassification {
        DominanceClassification::from_means("X", means, DEFAULT_THRESHOLD)
    }

    #[test]
    fn dominance_from_means() {
        assert_eq!(classify([103.0, 2.0, 9.0]).dominant, set(&[Trend]));
        assert_eq!(classify([106.0, 25.0, 13.0]).dominant, set(&[Trend, Seasonal]));
        let bf = classify([105.0, 16.0, 21.0]);
        assert_eq!(bf.dominant, ComponentSet::ALL);
        assert_eq!(bf.ordered, vec![Trend, Random, Seasonal]);
        assert_eq!(bf.label(), "T + R + S");
        let edge = classify([15.0, 15.0, 15.0]);
        assert!(edge.dominant.is_empty());
        assert_eq!(edge.label(), "");
    }

    #[test]
    fn ties_keep_component_order() {
        let c = classify([40.0, 40.0, 40.0]);
        assert_eq!(c.ordered, vec![Trend, Seasonal, Random]);
        let c = classify([10.0, 30.0, 30.0]);
        assert_eq!(c.ordered, vec![Seasonal, Random]);
    }

    #[test]
    fn default_rule_lookups() {
        let rules = default_style_rules();
        assert_eq!(rules.len(), 6);
        let bm = find_rule(&rules, Style::Blend, Capitalization::Medium).unwrap();
        assert_eq!(bm.flagged, set(&[Seasonal]));
        assert!(bm.required.contains(Trend));
        assert_eq!(bm.tolerated, set(&[Random]));
        let gs = find_rule(&rules, Style::Growth, Capitalization::Small).unwrap();
        assert_eq!(gs.required, set(&[Random]));
        assert_eq!(gs.tolerated, set(&[Trend, Seasonal]));
        let gl = find_rule(&rules, Style::Growth, Capitalization::Large).unwrap();
        assert_eq!(gl.required, set(&[Trend]));
        assert_eq!(gl.tolerated, set(&[Random]));
        assert_eq!(gl.flagged, set(&[Seasonal]));
        for style in [Style::Blend, Style::Growth] {
            for cap in [Capitalization::Small, Capitalization::Medium, Capitalization::Large] {
                assert!(find_rule(&rules, style, cap).is_some());
            }
        }
    }

    #[test]
    fn stock_statuses() {
        let rules = default_style_rules();
        let bm = find_rule(&rules, Style::Blend, Capitalization::Medium).unwrap();
        let voltas = classify([106.0, 25.0, 13.0]);
        assert_eq!(check_stock(&voltas, bm, false), StockStatus::Deviation);
        let concor = classify([101.0, 22.0, 18.0]);
        assert_eq!(check_stock(&concor, bm, true), StockStatus::Whitelisted);
        assert_eq!(check_stock(&concor, bm, false), StockStatus::Deviation);
        let icici = classify([103.0, 2.0, 8.0]);
        assert_eq!(check_stock(&icici, bm, true), StockStatus::Consistent);

        let gs = find_rule(&rules, Style::Growth, Capitalization::Small).unwrap();
        let hdfc = classify([101.0, 1.0, 5.0]);
        assert_eq!(check_stock(&hdfc, gs, false), StockStatus::Deviation);
    }

    #[test]
    fn whitelist_only_excuses_seasonal() {
        let strict = StyleRule::new(
            Style::Growth,
            Capitalization::Large,
            set(&[Trend]),
            ComponentSet::EMPTY,
            set(&[Seasonal, Random]),
        )
        .unwrap();
        let tr = classify([101.0, 3.0, 20.0]);
        assert_eq!(check_stock(&tr, &strict, true), StockStatus::Deviation);
        let tsr = classify([101.0, 20.0, 20.0]);
        assert_eq!(check_stock(&tsr, &strict, true), StockStatus::Deviation);
        // missing required is never excused
        let s_only = classify([10.0, 20.0, 3.0]);
        assert_eq!(check_stock(&s_only, &strict, true), StockStatus::Deviation);
    }

    #[test]
    fn rules_file_validation() {
        let ok = r#"[{"style":"growth","capitalization":"large",
            "required":["T"],"tolerated":[],"flagged":["R","S"]}]"#;
        let rules = parse_rules(ok).unwrap();
        assert_eq!(rules[0].flagged, set(&[Seasonal, Random]));

        let overlap = r#"[{"style":"growth","capitalization":"large",
            "required":["T"],"tolerated":["T"],"flagged":["R","S"]}]"#;
        assert!(matches!(parse_rules(overlap), Err(RuleError::NotPartition { .. })));
        let gap = r#"[{"style":"growth","capitalization":"large",
            "required":["T"],"tolerated":[],"flagged":["R"]}]"#;
        assert!(matches!(parse_rules(gap), Err(RuleError::NotPartition { .. })));
        let dup = format!("[{0},{0}]", &ok[1..ok.len() - 1]);
        assert!(matches!(parse_rules(&dup), Err(RuleError::DuplicateRule { .. })));
        let bad = r#"[{"style":"growth","capitalization":"large",
            "required":["X"],"tolerated":[],"flagged":["R","S"]}]"#;
        assert!(matches!(parse_rules(bad), Err(RuleError::Parse(_))));
        assert!(matches!(load_rules("/no/such/rules.json"), Err(RuleError::MissingFile(_))));
    }

    #[test]
    fn rules_round_trip_through_json() {
        let rules = default_style_rules();
        let text = serde_json::to_string(&rules).unwrap();
        assert_eq!(parse_rules(&text).unwrap(), rules);
    }

    fn fund(style: Style, cap: Capitalization, tickers: &[&str]) -> FundSpec {
        let holdings = tickers
            .iter()
            .map(|t| Holding::new(*t, format!("{t}.csv")))
            .collect();
        FundSpec::new("F", style, cap, vec![], holdings).unwrap()
    }

    #[test]
    fn fund_errors() {
        let f = fund(Style::Growth, Capitalization::Large, &["A", "B"]);
        let rules = default_style_rules();
        let only_a = vec![DominanceClassification::from_means("A", [100.0, 0.0, 0.0], 15.0)];
        assert!(matches!(
            check_fund(&f, &only_a, &rules, VerdictThresholds::default()),
            Err(StyleCheckError::ClassificationCountMismatch { holdings: 2, classifications: 1 })
        ));
        let wrong = vec![only_a[0].clone(), DominanceClassification::from_means("C", [100.0, 0.0, 0.0], 15.0)];
        assert!(matches!(
            check_fund(&f, &wrong, &rules, VerdictThresholds::default()),
            Err(StyleCheckError::MissingClassification(t)) if t == "B"
        ));
        let no_rules: Vec<StyleRule> = Vec::new();
        assert_eq!(
            check_fund(&f, &only_a, &no_rules, VerdictThresholds::default()).unwrap_err(),
            StyleCheckError::NoRuleForStyle(Style::Growth, Capitalization::Large)
        );
    }

    #[test]
    fn verdict_bounds() {
        let v = VerdictThresholds::default();
        assert_eq!(v.verdict(0, 10), Verdict::Consistent);
        assert_eq!(v.verdict(3, 10), Verdict::ConsistentWithDeviations);
        assert_eq!(v.verdict(4, 13), Verdict::Inconsistent);
        assert_eq!(v.verdict(4, 16), Verdict::ConsistentWithDeviations);
    }

    proptest! {
        #[test]
        fn raising_threshold_never_adds(
            t in 0.0f64..200.0, s in 0.0f64..60.0, r in 0.0f64..60.0,
            lo in 0.1f64..50.0, bump in 0.0f64..50.0,
        ) {
            let a = DominanceClassification::from_means("X", [t, s, r], lo);
            let b = DominanceClassification::from_means("X", [t, s, r], lo + bump);
            prop_assert!(b.dominant.is_subset(a.dominant));
            prop_assert_eq!(a.ordered.len(), a.dominant.len());
        }

        #[test]
        fn verdict_ignores_holding_order(
            means in proptest::collection::vec((50.0f64..150.0, 0.0f64..40.0, 0.0f64..40.0), 1..15),
            rot in 0usize..15,
        ) {
            let tickers: Vec<String> = (0..means.len()).map(|i| format!("S{i}")).collect();
            let refs: Vec<&str> = tickers.iter().map(String::as_str).collect();
            let classes: Vec<_> = means
                .iter()
                .zip(&tickers)
                .map(|((t, s, r), name)| DominanceClassification::from_means(name.clone(), [*t, *s, *r], 15.0))
                .collect();
            let rules = default_style_rules();
            let base = check_fund(&fund(Style::Blend, Capitalization::Medium, &refs), &classes, &rules, VerdictThresholds::default()).unwrap();
            let mut rotated = refs.clone();
            rotated.rotate_left(rot % refs.len());
            let mut rclasses = classes.clone();
            rclasses.reverse();
            let other = check_fund(&fund(Style::Blend, Capitalization::Medium, &rotated), &rclasses, &rules, VerdictThresholds::default()).unwrap();
            prop_assert_eq!(base.verdict, other.verdict);
            prop_assert_eq!(base.deviation_count, other.deviation_count);
        }
    }
}
