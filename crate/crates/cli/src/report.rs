//! Machine-readable sweep reports.

use std::collections::BTreeMap;
use std::io::Write;

use cgsum::sumrule::{FloatReport, SumRuleReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// CSV column order.
pub const CSV_COLUMNS: [&str; 8] = [
    "two_j",
    "k",
    "form",
    "lhs",
    "rhs",
    "pass",
    "term_count",
    "elapsed_us",
];

/// One verified cell. Exact values are `p/q` strings; float values use the
/// shortest round-trip decimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub two_j: i64,
    pub k: u64,
    pub form: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub term_count: u64,
    pub elapsed_us: u64,
}

impl From<&SumRuleReport> for ReportRecord {
    fn from(r: &SumRuleReport) -> Self {
        ReportRecord {
            two_j: r.two_j,
            k: r.k,
            form: r.form.as_str().to_string(),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            pass: r.pass,
            term_count: r.term_count,
            elapsed_us: r.elapsed.as_micros() as u64,
        }
    }
}

impl From<&FloatReport> for ReportRecord {
    fn from(r: &FloatReport) -> Self {
        ReportRecord {
            two_j: r.two_j,
            k: r.k,
            form: r.form.as_str().to_string(),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            pass: r.pass,
            term_count: r.term_count,
            elapsed_us: r.elapsed.as_micros() as u64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    /// RFC 3339, UTC.
    pub generated_at: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub reports: Vec<ReportRecord>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(
        parameters: BTreeMap<String, serde_json::Value>,
        reports: Vec<ReportRecord>,
    ) -> Self {
        let total = reports.len() as u64;
        let passed = reports.iter().filter(|r| r.pass).count() as u64;
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
            parameters,
            reports,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Writes the report rows only; parameters and summary have no CSV form.
    pub fn write_csv(&self, out: impl Write) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        for r in &self.reports {
            writer.serialize(r)?;
        }
        writer.flush()?;
        Ok(())
    }
}

pub fn read_csv(input: impl std::io::Read) -> csv::Result<Vec<ReportRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cgsum::sumrule::{verify, Form};
    use cgsum::HalfInt;

    fn sample() -> ReportDocument {
        let reports = [(2, 0, Form::Cg), (2, 2, Form::ThreeJ), (3, 4, Form::Cg)]
            .iter()
            .map(|&(tj, k, f)| ReportRecord::from(&verify(HalfInt::from_twice(tj), k, f).unwrap()))
            .collect();
        let mut params = BTreeMap::new();
        params.insert("mode".to_string(), serde_json::json!("exact"));
        ReportDocument::new(params, reports)
    }

    #[test]
    fn json_round_trip() {
        let doc = sample();
        assert_eq!(
            ReportDocument::from_json(&doc.to_json().unwrap()).unwrap(),
            doc
        );
    }

    #[test]
    fn exact_values_are_fraction_strings() {
        let doc = sample();
        assert_eq!(doc.reports[0].lhs, "1/6");
        assert_eq!(doc.reports[1].lhs, "7/72");
        assert_eq!(doc.reports[2].rhs, "0");
        assert_eq!(
            doc.summary,
            Summary {
                total: 3,
                passed: 3,
                failed: 0
            }
        );
    }

    #[test]
    fn csv_carries_the_same_rows() {
        let doc = sample();
        let mut buf = Vec::new();
        doc.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_COLUMNS.join(","));
        assert_eq!(read_csv(text.as_bytes()).unwrap(), doc.reports);
    }
}
