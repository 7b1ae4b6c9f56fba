use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::Rational;
use crate::sections::{evaluate, EvalPoint, SectionExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    ExactPass,
    /// Canonical residual nonzero but zero at every evaluation point.
    EvalPass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::ExactPass => "exact-pass",
            Status::EvalPass => "eval-pass",
            Status::Fail => "fail",
        }
    }

    pub fn passed(self) -> bool {
        self != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub identity: String,
    pub indices: Vec<i64>,
    /// Position of the section in the battery.
    pub section: usize,
    pub residual: String,
}

/// Outcome of one suite on one battery. Batteries check identities on
/// sample sections; a pass is evidence, not a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub n: usize,
    pub mu: Rational,
    pub battery_size: usize,
    pub seed: u64,
    pub status: Status,
    /// Number of identity instances checked.
    pub instances: usize,
    /// Instances that passed only through the evaluation oracle.
    pub eval_only: usize,
    /// Total canonical terms left in nonzero residuals.
    pub residual_terms: usize,
    pub failure: Option<Failure>,
}

/// Accumulates identity checks. Checkers for disjoint parts of a battery
/// can be merged; merging in battery order gives a deterministic report.
#[derive(Clone, Debug, Default)]
pub struct Checker {
    pub instances: usize,
    pub eval_only: usize,
    pub residual_terms: usize,
    pub failure: Option<Failure>,
    points: Vec<EvalPoint>,
}

impl Checker {
    pub fn new(points: &[EvalPoint]) -> Checker {
        Checker { points: points.to_vec(), ..Checker::default() }
    }

    /// Records that `residual` (lhs − rhs) should vanish.
    pub fn check(&mut self, identity: &str, indices: &[i64], section: usize, residual: &SectionExpr) -> bool {
        self.instances += 1;
        if residual.is_zero() {
            return true;
        }
        self.residual_terms += residual.term_count();
        if self.oracle_zero(residual) {
            self.eval_only += 1;
            return true;
        }
        if self.failure.is_none() {
            self.failure = Some(Failure {
                identity: identity.into(),
                indices: indices.to_vec(),
                section,
                residual: crate::sections::to_text(residual),
            });
        }
        false
    }

    fn oracle_zero(&self, e: &SectionExpr) -> bool {
        if self.points.is_empty() || e.groups().iter().any(|(g, _)| g.half_u) {
            return false;
        }
        self.points.iter().all(|p| matches!(evaluate(e, p), Ok(m) if m.is_empty()))
    }

    pub fn merge(&mut self, o: Checker) {
        self.instances += o.instances;
        self.eval_only += o.eval_only;
        self.residual_terms += o.residual_terms;
        if self.failure.is_none() {
            self.failure = o.failure;
        }
    }

    pub fn status(&self) -> Status {
        if self.failure.is_some() {
            Status::Fail
        } else if self.eval_only > 0 {
            Status::EvalPass
        } else {
            Status::ExactPass
        }
    }

    pub fn report(&self, check: &str, n: usize, mu: &Rational, battery_size: usize, seed: u64) -> VerificationReport {
        VerificationReport {
            check: check.into(),
            n,
            mu: mu.clone(),
            battery_size,
            seed,
            status: self.status(),
            instances: self.instances,
            eval_only: self.eval_only,
            residual_terms: self.residual_terms,
            failure: self.failure.clone(),
        }
    }
}
