use std::fmt::Write;

use serde_json::{Map, Value};

use crate::record::Record;

/// One JSON object per line.
pub fn json_lines(records: &[Record]) -> String {
    let mut s = String::new();
    for r in records {
        s.push_str(&serde_json::to_string(r).expect("records serialize"));
        s.push('\n');
    }
    s
}

fn inline(m: &Map<String, Value>) -> String {
    m.iter()
        .map(|(k, v)| match v {
            Value::String(t) => format!("{k}={t}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// A table per check, rows in record order.
pub fn markdown(records: &[Record]) -> String {
    let mut s = String::new();
    let mut current: Option<&str> = None;
    for r in records {
        if current != Some(r.check.as_str()) {
            if current.is_some() {
                s.push('\n');
            }
            let _ = writeln!(s, "## {}\n", r.check);
            s.push_str("| n | μ | params | status | residual terms | detail |\n");
            s.push_str("|---|---|---|---|---|---|\n");
            current = Some(&r.check);
        }
        let detail = inline(&r.detail).replace('|', "\\|");
        let _ = writeln!(s, "| {} | {} | {} | {} | {} | {} |", r.n, r.mu, inline(&r.params), r.status, r.residual_terms, detail);
    }
    let failed = records.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(s, "\n{} records, {} failed", records.len(), failed);
    s
}
