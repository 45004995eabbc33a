//! Serializable reports and their CSV encodings.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use tabalg::SpectrumMethod;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Oracle,
}

impl From<SpectrumMethod> for Method {
    fn from(m: SpectrumMethod) -> Self {
        match m {
            SpectrumMethod::ClosedForm => Method::ClosedForm,
            SpectrumMethod::Oracle => Method::Oracle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub d: usize,
    pub k: f64,
    pub alpha: f64,
    pub spectrum_method: Method,
    pub lambdas: Vec<f64>,
    pub thetas: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharsReport {
    pub d: usize,
    pub k: f64,
    pub alpha: f64,
    pub spectrum_method: Method,
    pub lambdas: Vec<f64>,
    pub thetas: Option<Vec<f64>>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<f64>>,
    pub valencies: Vec<f64>,
    pub order_n: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KreinReport {
    pub d: usize,
    pub k: f64,
    pub alpha: f64,
    pub spectrum_method: Method,
    pub order_n: f64,
    pub multiplicities: Vec<f64>,
    pub krein: Vec<Vec<Vec<f64>>>,
}

/// Full package for a polygon scheme. `alpha` is absent for the even polygon,
/// which is not homogeneous.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NgonReport {
    pub parity: Parity,
    pub d: usize,
    pub k: f64,
    pub alpha: Option<f64>,
    pub lambdas: Vec<f64>,
    pub thetas: Option<Vec<f64>>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<f64>>,
    pub valencies: Vec<f64>,
    pub order_n: f64,
    pub multiplicities: Vec<f64>,
    pub krein: Vec<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
    /// Informational checks do not affect `VerifyReport::passed`.
    pub gating: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub d: usize,
    pub k: f64,
    pub alpha: f64,
    pub spectrum_method: Method,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Spectrum(SpectrumReport),
    Chars(CharsReport),
    Krein(KreinReport),
    Ngon(NgonReport),
    Verify(VerifyReport),
}

/// Structured error written to stderr, one JSON object per line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub error: String,
    pub message: String,
    pub exit_code: i32,
    pub d: Option<usize>,
    pub k: Option<f64>,
}

/// Fixed-width scientific notation with 17 significant digits, enough to
/// recover every `f64` exactly.
pub fn csv_number(x: f64) -> String {
    format!("{x:.16e}")
}

impl Report {
    pub fn d(&self) -> usize {
        match self {
            Report::Spectrum(r) => r.d,
            Report::Chars(r) => r.d,
            Report::Krein(r) => r.d,
            Report::Ngon(r) => r.d,
            Report::Verify(r) => r.d,
        }
    }

    pub fn csv_header(&self) -> &'static str {
        match self {
            Report::Krein(_) => "i,j,w,value",
            Report::Verify(_) => "check,residual,threshold,passed,gating",
            _ => "i,j,value",
        }
    }

    /// Data lines without header. Spectra are written as row `i = 1` of the
    /// character table, since `p₁(j) = λⱼ`.
    pub fn csv_lines(&self) -> Vec<String> {
        match self {
            Report::Spectrum(r) => table_lines(std::slice::from_ref(&r.lambdas), 1),
            Report::Chars(r) => table_lines(&r.p, 0),
            Report::Ngon(r) => table_lines(&r.p, 0),
            Report::Krein(r) => {
                let mut out = Vec::new();
                for (i, plane) in r.krein.iter().enumerate() {
                    for (j, row) in plane.iter().enumerate() {
                        for (w, &v) in row.iter().enumerate() {
                            out.push(format!("{i},{j},{w},{}", csv_number(v)));
                        }
                    }
                }
                out
            }
            Report::Verify(r) => r
                .checks
                .iter()
                .map(|c| {
                    format!(
                        "{},{},{},{},{}",
                        c.name,
                        csv_number(c.residual),
                        csv_number(c.threshold),
                        c.passed,
                        c.gating
                    )
                })
                .collect(),
        }
    }
}

fn table_lines(rows: &[Vec<f64>], first_row: usize) -> Vec<String> {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            out.push(format!("{},{j},{}", i + first_row, csv_number(v)));
        }
    }
    out
}

/// CSV for one report, or for a sweep with a leading `d` column.
pub fn to_csv(reports: &[Report], sweep: bool) -> String {
    let mut out = String::new();
    let Some(first) = reports.first() else {
        return out;
    };
    if sweep {
        let _ = writeln!(out, "d,{}", first.csv_header());
    } else {
        let _ = writeln!(out, "{}", first.csv_header());
    }
    for r in reports {
        for line in r.csv_lines() {
            if sweep {
                let _ = writeln!(out, "{},{line}", r.d());
            } else {
                let _ = writeln!(out, "{line}");
            }
        }
    }
    out
}

pub fn to_json(reports: &[Report], sweep: bool) -> String {
    let mut s = if sweep {
        serde_json::to_string_pretty(reports)
    } else {
        match reports.first() {
            Some(r) => serde_json::to_string_pretty(r),
            None => Ok("null".to_string()),
        }
    }
    .expect("reports contain only plain data");
    s.push('\n');
    s
}
