//! Serializable views of core results.
//!
//! Exact rationals are always strings `"num/den"`. Floats are rounded to 12
//! significant digits; JSON carries them as numbers, CSV as `LowerExp` text.
//! Interval values are `{"lower", "upper"}` objects in JSON and `lo..hi` text
//! in CSV.

use std::fmt;
use std::str::FromStr;

use covolume_core::covolume::CovolumeResult;
use covolume_core::{EpsilonStatus, ExactRational, Span};
use serde::{Deserialize, Serialize};

/// CSV header for [`SurveyRow`].
pub const SURVEY_HEADER: [&str; 13] =
    ["d", "disc", "n", "nu", "chi", "volume", "h", "h_torsion", "r", "epsilon", "mult_lo", "mult_hi", "exact"];

#[derive(Debug, Clone, PartialEq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed record: {}", self.0)
    }
}

impl std::error::Error for FormatError {}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("LowerExp output parses")
}

pub fn format_float(x: f64) -> String {
    format!("{x:.11e}")
}

fn parse_float(s: &str) -> Result<f64, FormatError> {
    s.parse().map_err(|_| FormatError(format!("bad float {s:?}")))
}

fn parse_rational(s: &str) -> Result<ExactRational, FormatError> {
    s.parse().map_err(|_| FormatError(format!("bad rational {s:?}")))
}

fn span_text<T>(span: &Span<T>, show: impl Fn(&T) -> String) -> String {
    match span {
        Span::Exact(v) => show(v),
        Span::Interval { lower, upper } => format!("{}..{}", show(lower), show(upper)),
    }
}

fn parse_span<T>(s: &str, parse: impl Fn(&str) -> Result<T, FormatError>) -> Result<Span<T>, FormatError> {
    match s.split_once("..") {
        Some((lo, hi)) => Ok(Span::Interval { lower: parse(lo)?, upper: parse(hi)? }),
        None => Ok(Span::Exact(parse(s)?)),
    }
}

pub fn epsilon_text(eps: &EpsilonStatus) -> String {
    match eps {
        EpsilonStatus::NotApplicable => "n/a".into(),
        EpsilonStatus::Exact(e) => e.to_string(),
        EpsilonStatus::Bounded { lower, upper } => format!("{lower}..{upper}"),
    }
}

pub fn parse_epsilon(s: &str) -> Result<EpsilonStatus, FormatError> {
    let int = |t: &str| t.parse::<u64>().map_err(|_| FormatError(format!("bad epsilon {s:?}")));
    if s == "n/a" {
        return Ok(EpsilonStatus::NotApplicable);
    }
    match s.split_once("..") {
        Some((lo, hi)) => Ok(EpsilonStatus::Bounded { lower: int(lo)?, upper: int(hi)? }),
        None => Ok(EpsilonStatus::Exact(int(s)?)),
    }
}

/// One `(field, n)` record.
#[derive(Debug, Clone, PartialEq)]
pub struct SurveyRow {
    pub d: u64,
    pub disc: u64,
    pub n: u32,
    pub nu: Span<ExactRational>,
    pub chi: Span<ExactRational>,
    /// Rounded to 12 significant digits.
    pub volume: Span<f64>,
    pub h: u64,
    pub h_torsion: u64,
    pub r: usize,
    pub epsilon: EpsilonStatus,
    pub multiplicity: Option<(u64, u64)>,
    /// `[Gamma : Lambda]`; carried in JSON only.
    pub index: Option<Span<ExactRational>>,
}

impl SurveyRow {
    pub fn exact(&self) -> bool {
        self.nu.is_exact()
    }

    pub fn from_result(result: &CovolumeResult) -> Self {
        Self {
            d: result.field.d(),
            disc: result.field.disc_abs(),
            n: result.n,
            nu: result.nu.clone(),
            chi: result.chi.clone(),
            volume: result.volume.map(|v| round12(v.value)),
            h: result.h,
            h_torsion: result.h_torsion,
            r: result.field.r(),
            epsilon: result.epsilon,
            multiplicity: result.multiplicity,
            index: Some(result.index.clone()),
        }
    }

    pub fn to_csv_record(&self) -> CsvRow {
        CsvRow {
            d: self.d,
            disc: self.disc,
            n: self.n,
            nu: span_text(&self.nu, ToString::to_string),
            chi: span_text(&self.chi, ToString::to_string),
            volume: span_text(&self.volume, |v| format_float(*v)),
            h: self.h,
            h_torsion: self.h_torsion,
            r: self.r,
            epsilon: epsilon_text(&self.epsilon),
            mult_lo: self.multiplicity.map(|m| m.0),
            mult_hi: self.multiplicity.map(|m| m.1),
            exact: self.exact(),
        }
    }

    pub fn from_csv_record(row: &CsvRow) -> Result<Self, FormatError> {
        let multiplicity = match (row.mult_lo, row.mult_hi) {
            (Some(lo), Some(hi)) => Some((lo, hi)),
            (None, None) => None,
            _ => return Err(FormatError("mult_lo and mult_hi must both be present or absent".into())),
        };
        let parsed = Self {
            d: row.d,
            disc: row.disc,
            n: row.n,
            nu: parse_span(&row.nu, parse_rational)?,
            chi: parse_span(&row.chi, parse_rational)?,
            volume: parse_span(&row.volume, parse_float)?,
            h: row.h,
            h_torsion: row.h_torsion,
            r: row.r,
            epsilon: parse_epsilon(&row.epsilon)?,
            multiplicity,
            index: None,
        };
        if parsed.exact() != row.exact {
            return Err(FormatError("exact flag disagrees with nu".into()));
        }
        Ok(parsed)
    }

    pub fn to_json_record(&self) -> JsonRow {
        JsonRow {
            d: self.d,
            disc: self.disc,
            n: self.n,
            exact: self.exact(),
            nu: JsonRational::from_span(&self.nu),
            chi: JsonRational::from_span(&self.chi),
            volume: JsonFloat::from_span(&self.volume),
            h: self.h,
            h_torsion: self.h_torsion,
            r: self.r,
            epsilon: epsilon_text(&self.epsilon),
            mult_lo: self.multiplicity.map(|m| m.0),
            mult_hi: self.multiplicity.map(|m| m.1),
            index: self.index.as_ref().map(JsonRational::from_span),
        }
    }

    pub fn from_json_record(row: &JsonRow) -> Result<Self, FormatError> {
        let multiplicity = match (row.mult_lo, row.mult_hi) {
            (Some(lo), Some(hi)) => Some((lo, hi)),
            (None, None) => None,
            _ => return Err(FormatError("mult_lo and mult_hi must both be present or absent".into())),
        };
        let parsed = Self {
            d: row.d,
            disc: row.disc,
            n: row.n,
            nu: row.nu.to_span()?,
            chi: row.chi.to_span()?,
            volume: row.volume.to_span(),
            h: row.h,
            h_torsion: row.h_torsion,
            r: row.r,
            epsilon: parse_epsilon(&row.epsilon)?,
            multiplicity,
            index: row.index.as_ref().map(JsonRational::to_span).transpose()?,
        };
        if parsed.exact() != row.exact {
            return Err(FormatError("exact flag disagrees with nu".into()));
        }
        Ok(parsed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_record()).expect("rows serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let row: JsonRow = serde_json::from_str(text).map_err(|e| FormatError(e.to_string()))?;
        Self::from_json_record(&row)
    }

    /// The row as one CSV line, without header or trailing newline.
    pub fn to_csv_line(&self) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        w.serialize(self.to_csv_record()).expect("rows serialize");
        let mut text = String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8");
        text.truncate(text.trim_end().len());
        text
    }

    pub fn from_csv_line(line: &str) -> Result<Self, FormatError> {
        let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(line.as_bytes());
        let row: CsvRow = r
            .deserialize()
            .next()
            .ok_or_else(|| FormatError("empty CSV line".into()))?
            .map_err(|e| FormatError(e.to_string()))?;
        Self::from_csv_record(&row)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub d: u64,
    pub disc: u64,
    pub n: u32,
    pub nu: String,
    pub chi: String,
    pub volume: String,
    pub h: u64,
    pub h_torsion: u64,
    pub r: usize,
    pub epsilon: String,
    pub mult_lo: Option<u64>,
    pub mult_hi: Option<u64>,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonRational {
    Exact(String),
    Interval { lower: String, upper: String },
}

impl JsonRational {
    pub fn from_span(span: &Span<ExactRational>) -> Self {
        match span {
            Span::Exact(v) => Self::Exact(v.to_string()),
            Span::Interval { lower, upper } => Self::Interval { lower: lower.to_string(), upper: upper.to_string() },
        }
    }

    pub fn to_span(&self) -> Result<Span<ExactRational>, FormatError> {
        Ok(match self {
            Self::Exact(v) => Span::Exact(parse_rational(v)?),
            Self::Interval { lower, upper } => Span::Interval { lower: parse_rational(lower)?, upper: parse_rational(upper)? },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonFloat {
    Exact(f64),
    Interval { lower: f64, upper: f64 },
}

impl JsonFloat {
    pub fn from_span(span: &Span<f64>) -> Self {
        match span {
            Span::Exact(v) => Self::Exact(round12(*v)),
            Span::Interval { lower, upper } => Self::Interval { lower: round12(*lower), upper: round12(*upper) },
        }
    }

    pub fn to_span(&self) -> Span<f64> {
        match *self {
            Self::Exact(v) => Span::Exact(v),
            Self::Interval { lower, upper } => Span::Interval { lower, upper },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRow {
    pub d: u64,
    pub disc: u64,
    pub n: u32,
    pub exact: bool,
    pub nu: JsonRational,
    pub chi: JsonRational,
    pub volume: JsonFloat,
    pub h: u64,
    pub h_torsion: u64,
    pub r: usize,
    pub epsilon: String,
    pub mult_lo: Option<u64>,
    pub mult_hi: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<JsonRational>,
}

impl FromStr for SurveyRow {
    type Err = FormatError;

    /// Accepts either a JSON object or a CSV data line.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim_start().starts_with('{') {
            Self::from_json(s)
        } else {
            Self::from_csv_line(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use covolume_core::covolume::covolume;
    use covolume_core::QuadField;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round12(3.031_484_370_409_155e-7), 3.031_484_370_41e-7);
        assert_eq!(format_float(0.365_540_903_744_050_6), "3.65540903744e-1");
        assert_eq!(round12(0.0), 0.0);
    }

    #[test]
    fn exact_row_formats() {
        let row = SurveyRow::from_result(&covolume(&QuadField::eisenstein(), 2).unwrap());
        assert_eq!(row.to_csv_line(), "3,3,2,1/72,1/72,3.65540903744e-1,1,1,1,n/a,2,2,true");
        let json = row.to_json();
        assert!(json.contains("\"nu\":\"1/72\""), "{json}");
        assert!(json.contains("\"exact\":true"), "{json}");
    }

    #[test]
    fn interval_row_formats() {
        let f = QuadField::from_squarefree_d(5).unwrap();
        let row = SurveyRow::from_result(&covolume(&f, 3).unwrap());
        assert!(!row.exact());
        let line = row.to_csv_line();
        assert!(line.contains(".."), "{line}");
        assert!(line.ends_with(",false"), "{line}");
        let json = row.to_json();
        assert!(json.contains("\"lower\"") && json.contains("\"exact\":false"), "{json}");
    }

    #[test]
    fn epsilon_text_round_trip() {
        for eps in [EpsilonStatus::NotApplicable, EpsilonStatus::Exact(2), EpsilonStatus::Bounded { lower: 2, upper: 8 }] {
            assert_eq!(parse_epsilon(&epsilon_text(&eps)).unwrap(), eps);
        }
        assert!(parse_epsilon("two").is_err());
    }

    #[test]
    fn rejects_inconsistent_exact_flag() {
        let row = SurveyRow::from_result(&covolume(&QuadField::eisenstein(), 2).unwrap());
        let line = row.to_csv_line().replace(",true", ",false");
        assert!(SurveyRow::from_csv_line(&line).is_err());
    }
}
