//! Report serialization: the JSON schema shared by every command, and a plain table.

use std::fmt::Write;

use serde::Serialize;

use skein_core::{AlgebraKind, VerificationReport};

use crate::expand::{Expansion, Term};

#[derive(Debug, Serialize)]
pub struct FailureJson {
    pub bidegree: [i64; 2],
    pub difference: String,
}

/// Field order follows the published schema.
#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub check: String,
    pub algebra: String,
    pub max_degree: u32,
    pub status: &'static str,
    pub bidegrees_checked: usize,
    pub failures: Vec<FailureJson>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            check: r.check.clone(),
            algebra: r.algebra.clone(),
            max_degree: r.max_degree,
            status: r.status.as_str(),
            bidegrees_checked: r.bidegrees_checked,
            failures: r
                .failures
                .iter()
                .map(|f| FailureJson {
                    bidegree: [f.bidegree.i, f.bidegree.j],
                    difference: f.difference.clone(),
                })
                .collect(),
            elapsed_ms: r.elapsed_ms,
            result: None,
            terms: None,
        }
    }
}

pub fn render_json(report: &VerificationReport) -> String {
    to_line(&ReportJson::from(report))
}

fn to_line(r: &ReportJson) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

/// `expand` in JSON: a passing report carrying the canonical form under
/// `result` and the term list under `terms`.
pub(crate) fn expand_json(algebra: AlgebraKind, max_degree: u32, e: &Expansion) -> String {
    let report = VerificationReport::new("expand", algebra.name(), max_degree, 0, Vec::new());
    let mut json = ReportJson::from(&report);
    json.result = Some(e.text.clone());
    json.terms = Some(e.terms.clone());
    to_line(&json)
}

pub fn render_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let rows = [
        ("check", r.check.clone()),
        ("algebra", r.algebra.clone()),
        ("max_degree", r.max_degree.to_string()),
        ("status", r.status.as_str().to_string()),
        ("checked", r.bidegrees_checked.to_string()),
        ("failures", r.failures.len().to_string()),
        ("elapsed_ms", r.elapsed_ms.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{:<12}{}", k, v);
    }
    if !r.failures.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "{:<12}difference", "bidegree");
        for f in &r.failures {
            let _ = writeln!(out, "{:<12}{}", f.bidegree.to_string(), f.difference);
        }
    }
    out
}
