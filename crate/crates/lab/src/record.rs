use std::cmp::Ordering;

use micz_core::dynsym::Status;
use micz_core::exact::Rational;
use serde::Serialize;
use serde_json::{Map, Value};

/// One line of the report stream.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub check: String,
    pub n: usize,
    pub mu: String,
    /// Inputs that identify the record within (check, n, mu).
    pub params: Map<String, Value>,
    pub status: String,
    pub residual_terms: usize,
    /// Wall time, only with --timings so that reports stay reproducible.
    pub elapsed_ms: Option<u64>,
    pub seed: u64,
    /// Computed values.
    pub detail: Map<String, Value>,
}

impl Record {
    pub fn new(check: &str, n: usize, mu: &Rational, seed: u64) -> Record {
        Record {
            check: check.to_string(),
            n,
            mu: mu.to_string(),
            params: Map::new(),
            status: Status::ExactPass.as_str().to_string(),
            residual_terms: 0,
            elapsed_ms: None,
            seed,
            detail: Map::new(),
        }
    }

    pub fn param(mut self, k: &str, v: impl Into<Value>) -> Record {
        self.params.insert(k.to_string(), v.into());
        self
    }

    pub fn detail(mut self, k: &str, v: impl Into<Value>) -> Record {
        self.detail.insert(k.to_string(), v.into());
        self
    }

    pub fn status(mut self, s: Status) -> Record {
        self.status = s.as_str().to_string();
        self
    }

    pub fn ok(self, pass: bool) -> Record {
        self.status(if pass { Status::ExactPass } else { Status::Fail })
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail.as_str()
    }

    pub fn mu_value(&self) -> Rational {
        self.mu.parse().expect("records carry a parseable μ")
    }

    fn cmp_key(&self, o: &Record) -> Ordering {
        self.check
            .cmp(&o.check)
            .then(self.n.cmp(&o.n))
            .then_with(|| self.mu_value().cmp(&o.mu_value()))
            .then_with(|| cmp_params(&self.params, &o.params))
    }
}

/// Maps iterate in key order; integers compare numerically, anything else
/// by its JSON text.
fn cmp_params(a: &Map<String, Value>, b: &Map<String, Value>) -> Ordering {
    for ((ka, va), (kb, vb)) in a.iter().zip(b) {
        let c = ka.cmp(kb).then_with(|| match (va.as_i64(), vb.as_i64()) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => va.to_string().cmp(&vb.to_string()),
        });
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

/// Deterministic report order: (check, n, μ, params).
pub fn sort_records(v: &mut [Record]) {
    v.sort_by(|a, b| a.cmp_key(b));
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}
