//! Output records in CSV or newline-delimited JSON.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

pub const CSV_HEADER: &str = "z_re,z_im,value_re,value_im,method,est_error";
pub const CSV_ORACLE_HEADER: &str = ",oracle_re,oracle_im,rel_diff";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub z_re: f64,
    pub z_im: f64,
    pub value_re: f64,
    pub value_im: f64,
    pub method: String,
    pub est_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_im: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_diff: Option<f64>,
}

impl OutputRecord {
    fn csv_row(&self) -> String {
        let mut row = format!(
            "{:?},{:?},{:?},{:?},{},{:?}",
            self.z_re, self.z_im, self.value_re, self.value_im, self.method, self.est_error
        );
        if let (Some(a), Some(b), Some(r)) = (self.oracle_re, self.oracle_im, self.rel_diff) {
            row.push_str(&format!(",{a:?},{b:?},{r:?}"));
        }
        row
    }
}

/// Writes the records; the CSV header carries the oracle columns when
/// `with_oracle` is set.
pub fn write_records<W: Write>(
    out: &mut W,
    records: &[OutputRecord],
    format: Format,
    with_oracle: bool,
) -> io::Result<()> {
    match format {
        Format::Csv => {
            let header = if with_oracle {
                format!("{CSV_HEADER}{CSV_ORACLE_HEADER}")
            } else {
                CSV_HEADER.to_string()
            };
            writeln!(out, "{header}")?;
            for r in records {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(oracle: bool) -> OutputRecord {
        OutputRecord {
            z_re: 1.0,
            z_im: 0.0,
            value_re: 0.538_079_506_912_768_4,
            value_im: 0.0,
            method: "series".into(),
            est_error: 1e-16,
            oracle_re: oracle.then_some(0.5),
            oracle_im: oracle.then_some(0.0),
            rel_diff: oracle.then_some(0.25),
        }
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[record(false)], Format::Csv, false).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "z_re,z_im,value_re,value_im,method,est_error\n1.0,0.0,0.5380795069127684,0.0,series,1e-16\n");
    }

    #[test]
    fn json_field_names() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[record(true)], Format::Json, true).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        for k in ["z_re", "z_im", "value_re", "value_im", "method", "est_error", "oracle_re", "oracle_im", "rel_diff"] {
            assert!(v.get(k).is_some(), "{k}");
        }
    }
}
