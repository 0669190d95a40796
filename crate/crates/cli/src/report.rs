//! Rows emitted by every subcommand and their CSV/JSON rendering.

use std::io::Write;

use census_core::CertifiedReal;
use num_rational::BigRational;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

/// Decimal places for the `_approx` columns.
pub const DIGITS: u32 = 6;

/// Column order of the CSV header. JSON objects carry the same keys.
pub const COLUMNS: [&str; 8] = [
    "command",
    "params",
    "count",
    "main_term",
    "error_bound_approx",
    "lower_approx",
    "upper_approx",
    "within_bound",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub Vec<(String, String)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    /// `key=value` pairs joined by `;`.
    pub fn joined(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// One output row. Every number is exact except the `_approx` columns,
/// which hold the outward-rounded ends of certified intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub command: String,
    pub params: Params,
    pub count: Option<String>,
    pub main_term: Option<String>,
    pub error_bound_approx: Option<String>,
    pub lower_approx: Option<String>,
    pub upper_approx: Option<String>,
    pub within_bound: Option<bool>,
}

impl CensusReport {
    pub fn new(command: &str, params: Params) -> Self {
        CensusReport {
            command: command.to_string(),
            params,
            count: None,
            main_term: None,
            error_bound_approx: None,
            lower_approx: None,
            upper_approx: None,
            within_bound: None,
        }
    }

    pub fn count(mut self, c: impl ToString) -> Self {
        self.count = Some(c.to_string());
        self
    }

    pub fn main_term(mut self, m: impl Into<String>) -> Self {
        self.main_term = Some(m.into());
        self
    }

    pub fn error_bound(mut self, e: &CertifiedReal) -> Self {
        self.error_bound_approx = Some(e.hi_decimal(DIGITS));
        self
    }

    pub fn lower(mut self, l: &CertifiedReal) -> Self {
        self.lower_approx = Some(l.lo_decimal(DIGITS));
        self
    }

    pub fn upper(mut self, u: &CertifiedReal) -> Self {
        self.upper_approx = Some(u.hi_decimal(DIGITS));
        self
    }

    pub fn within(mut self, w: bool) -> Self {
        self.within_bound = Some(w);
        self
    }

    fn csv_record(&self) -> [String; 8] {
        let opt = |o: &Option<String>| o.clone().unwrap_or_default();
        [
            self.command.clone(),
            self.params.joined(),
            opt(&self.count),
            opt(&self.main_term),
            opt(&self.error_bound_approx),
            opt(&self.lower_approx),
            opt(&self.upper_approx),
            self.within_bound.map(|b| b.to_string()).unwrap_or_default(),
        ]
    }
}

/// Exact rational as `p/q`.
pub fn rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn write_reports(out: &mut dyn Write, rows: &[CensusReport], format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            w.write_record(COLUMNS)?;
            for r in rows {
                w.write_record(r.csv_record())?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_fields_with_commas() {
        let r = CensusReport::new("attainable", Params::new().with("bseq", "1/4,2/3")).count(3);
        let mut buf = Vec::new();
        write_reports(&mut buf, &[r], Format::Csv).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.lines().nth(1).unwrap(), "attainable,\"bseq=1/4,2/3\",3,,,,,");
    }

    #[test]
    fn json_keeps_param_order() {
        let r = CensusReport::new("x", Params::new().with("z", 1).with("a", 2)).within(true);
        let mut buf = Vec::new();
        write_reports(&mut buf, &[r], Format::Json).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.find("\"z\"").unwrap() < s.find("\"a\"").unwrap());
        assert!(s.contains("\"within_bound\": true"));
    }
}
