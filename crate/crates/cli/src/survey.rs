//! Bounded enumeration of weight triples and the survey record format.

use std::collections::BTreeMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use wps_core::arith::{format_rational, serde_rational};
use wps_core::{
    conformal_einstein_regime, einstein_status, orbifold::ht_deficit, yamabe_report,
    ConformalRegime, EinsteinTag, PiSurd, Rational, Weights,
};

use crate::format::Format;

/// Every valid triple `r <= q <= p <= max_p`, pairwise coprime, in ascending
/// lexicographic `(p, q, r)` order.
pub fn enumerate_weights(max_p: u64) -> impl Iterator<Item = (u64, u64, u64)> {
    (1..=max_p).flat_map(|p| {
        (1..=p).filter(move |q| q.gcd(&p) == 1).flat_map(move |q| {
            (1..=q)
                .filter(move |r| r.gcd(&q) == 1 && r.gcd(&p) == 1)
                .map(move |r| (r, q, p))
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YamabeSummary {
    pub exact: Option<PiSurd>,
    pub lower: Option<PiSurd>,
    /// The smaller of the elementary and Bochner-Kähler upper bounds.
    pub upper: PiSurd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub weights: Weights,
    pub einstein_tag: EinsteinTag,
    pub regime_tag: ConformalRegime,
    #[serde(with = "serde_rational")]
    pub ht_deficit: Rational,
    pub yamabe_exact_or_bounds: YamabeSummary,
    pub effective_exact: bool,
    pub effective_linear: bool,
}

impl SurveyRecord {
    pub fn new(w: &Weights) -> Self {
        let yamabe = yamabe_report(w);
        SurveyRecord {
            weights: w.clone(),
            einstein_tag: einstein_status(w).tag,
            regime_tag: conformal_einstein_regime(w),
            ht_deficit: ht_deficit(w),
            yamabe_exact_or_bounds: YamabeSummary {
                exact: yamabe.exact,
                lower: yamabe.lower,
                upper: yamabe.reported_upper,
            },
            effective_exact: yamabe.effective_exact,
            effective_linear: yamabe.effective_linear,
        }
    }
}

/// Restricts a survey to one Einstein status or one conformal regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Einstein(EinsteinTag),
    Regime(ConformalRegime),
}

pub const REGIMES: [ConformalRegime; 3] = [
    ConformalRegime::PositiveEinstein,
    ConformalRegime::RicciFlatPunctured,
    ConformalRegime::NegativePieces,
];

pub fn regime_name(regime: ConformalRegime) -> &'static str {
    match regime {
        ConformalRegime::PositiveEinstein => "positive_einstein",
        ConformalRegime::RicciFlatPunctured => "ricci_flat_punctured",
        ConformalRegime::NegativePieces => "negative_pieces",
    }
}

impl Filter {
    pub fn parse(name: &str) -> Option<Filter> {
        if let Some(tag) = EinsteinTag::ALL.into_iter().find(|t| t.as_str() == name) {
            return Some(Filter::Einstein(tag));
        }
        REGIMES
            .into_iter()
            .find(|r| regime_name(*r) == name)
            .map(Filter::Regime)
    }

    pub fn names() -> Vec<&'static str> {
        EinsteinTag::ALL
            .iter()
            .map(|t| t.as_str())
            .chain(REGIMES.iter().map(|r| regime_name(*r)))
            .collect()
    }

    pub fn accepts(&self, rec: &SurveyRecord) -> bool {
        match self {
            Filter::Einstein(tag) => rec.einstein_tag == *tag,
            Filter::Regime(regime) => rec.regime_tag == *regime,
        }
    }
}

/// Counts of Einstein statuses over every enumerated triple.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurveySummary {
    pub enumerated: u64,
    pub emitted: u64,
    pub by_status: BTreeMap<EinsteinTag, u64>,
}

impl SurveySummary {
    pub fn write_histogram(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "triples enumerated: {}, emitted: {}",
            self.enumerated, self.emitted
        )?;
        let widest = self.by_status.values().copied().max().unwrap_or(0).max(1);
        for tag in EinsteinTag::ALL {
            let n = self.by_status.get(&tag).copied().unwrap_or(0);
            let bar = "#".repeat(((n * 40).div_ceil(widest)) as usize);
            writeln!(out, "{:<24} {:>10} {}", tag.as_str(), n, bar)?;
        }
        Ok(())
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "r",
    "q",
    "p",
    "einstein",
    "regime",
    "ht_deficit",
    "yamabe_exact",
    "yamabe_lower",
    "yamabe_upper",
    "effective_exact",
    "effective_linear",
];

fn opt_surd(x: &Option<PiSurd>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn csv_row(rec: &SurveyRecord) -> [String; 11] {
    let y = &rec.yamabe_exact_or_bounds;
    [
        rec.weights.r().to_string(),
        rec.weights.q().to_string(),
        rec.weights.p().to_string(),
        rec.einstein_tag.as_str().to_owned(),
        regime_name(rec.regime_tag).to_owned(),
        format_rational(&rec.ht_deficit),
        opt_surd(&y.exact),
        opt_surd(&y.lower),
        y.upper.to_string(),
        rec.effective_exact.to_string(),
        rec.effective_linear.to_string(),
    ]
}

pub fn text_header() -> String {
    format!(
        "{:>6} {:>6} {:>6}  {:<24} {:<21} {:>12}  {:<28} {:>5} {:>5}",
        "r", "q", "p", "einstein", "regime", "ht_deficit", "yamabe", "eff", "lin"
    )
}

pub fn text_row(rec: &SurveyRecord) -> String {
    let y = &rec.yamabe_exact_or_bounds;
    let yamabe = match (&y.exact, &y.lower) {
        (Some(exact), _) => format!("= {:.4}", exact.to_f64()),
        (None, Some(lower)) => format!("in [{:.4}, {:.4}]", lower.to_f64(), y.upper.to_f64()),
        (None, None) => format!("<= {:.4}", y.upper.to_f64()),
    };
    format!(
        "{:>6} {:>6} {:>6}  {:<24} {:<21} {:>12}  {:<28} {:>5} {:>5}",
        rec.weights.r().to_string(),
        rec.weights.q().to_string(),
        rec.weights.p().to_string(),
        rec.einstein_tag.as_str(),
        regime_name(rec.regime_tag),
        format_rational(&rec.ht_deficit),
        yamabe,
        rec.effective_exact,
        rec.effective_linear,
    )
}

enum Sink<'a> {
    Json(&'a mut dyn Write),
    Csv(Box<csv::Writer<&'a mut dyn Write>>),
    Text(&'a mut dyn Write),
}

impl Sink<'_> {
    fn emit(&mut self, rec: &SurveyRecord) -> io::Result<()> {
        match self {
            Sink::Json(out) => {
                serde_json::to_writer(&mut **out, rec)?;
                writeln!(out)
            }
            Sink::Csv(w) => {
                w.write_record(csv_row(rec))?;
                w.flush()
            }
            Sink::Text(out) => writeln!(out, "{}", text_row(rec)),
        }
    }
}

/// Streams the survey to `out` and returns the status histogram.
pub fn run_survey(
    max_p: u64,
    format: Format,
    filter: Option<Filter>,
    out: &mut dyn Write,
) -> io::Result<SurveySummary> {
    let mut sink = match format {
        Format::Json => Sink::Json(out),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            Sink::Csv(Box::new(w))
        }
        Format::Text => {
            writeln!(out, "{}", text_header())?;
            Sink::Text(out)
        }
    };

    let mut summary = SurveySummary::default();
    for (r, q, p) in enumerate_weights(max_p) {
        let w = Weights::new(BigInt::from(r), BigInt::from(q), BigInt::from(p))
            .expect("enumeration yields valid weights");
        let rec = SurveyRecord::new(&w);
        summary.enumerated += 1;
        *summary.by_status.entry(rec.einstein_tag).or_default() += 1;
        if filter.is_some_and(|f| !f.accepts(&rec)) {
            continue;
        }
        summary.emitted += 1;
        sink.emit(&rec)?;
    }
    if let Sink::Csv(w) = &mut sink {
        w.flush()?;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent brute-force count over all ordered triples.
    fn count_valid(max_p: u64) -> usize {
        let mut n = 0;
        for r in 1..=max_p {
            for q in 1..=max_p {
                for p in 1..=max_p {
                    if r <= q && q <= p && r.gcd(&q) == 1 && r.gcd(&p) == 1 && q.gcd(&p) == 1 {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_weights(1).collect::<Vec<_>>(), vec![(1, 1, 1)]);
        assert_eq!(
            enumerate_weights(2).collect::<Vec<_>>(),
            vec![(1, 1, 1), (1, 1, 2)]
        );
        let five: Vec<_> = enumerate_weights(5).collect();
        assert_eq!(five.len(), 12);
        for t in [(1, 1, 2), (1, 2, 3), (1, 4, 5), (2, 3, 5)] {
            assert!(five.contains(&t));
        }
    }

    #[test]
    fn enumeration_matches_brute_count_and_order() {
        for max_p in [3, 10, 40] {
            let got: Vec<_> = enumerate_weights(max_p).collect();
            assert_eq!(got.len(), count_valid(max_p));
            let mut sorted = got.clone();
            sorted.sort_by_key(|&(r, q, p)| (p, q, r));
            assert_eq!(got, sorted);
        }
    }

    #[test]
    fn filters() {
        assert_eq!(
            Filter::parse("obstructed"),
            Some(Filter::Einstein(EinsteinTag::Obstructed))
        );
        assert_eq!(
            Filter::parse("ricci_flat_punctured"),
            Some(Filter::Regime(ConformalRegime::RicciFlatPunctured))
        );
        assert_eq!(Filter::parse("nonsense"), None);
        assert_eq!(Filter::names().len(), 7);

        let mut out = Vec::new();
        let s = run_survey(5, Format::Json, Filter::parse("unknown"), &mut out).unwrap();
        assert_eq!(s.enumerated, 12);
        let lines = String::from_utf8(out).unwrap();
        assert_eq!(lines.lines().count() as u64, s.emitted);
        assert!(lines
            .lines()
            .all(|l| l.contains(r#""einstein_tag":"unknown""#)));
    }

    #[test]
    fn summary_counts() {
        let s = run_survey(5, Format::Text, None, &mut io::sink()).unwrap();
        assert_eq!(s.by_status.values().sum::<u64>(), 12);
        assert_eq!(s.by_status[&EinsteinTag::KaehlerEinsteinExists], 1);
    }
}
