//! Term view and canonical text form of sections.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::exact::{Rational, Scalar};

use super::poly::{exp, R_SLOT};
use super::SectionExpr;

/// One term c·x^m·r^s·u^t·e^{q r} ⊗ e_spin of the canonical form.
///
/// Positive integer powers of u and w never appear: u-powers are ≤ 1/2 and
/// the w-exponent is always zero after canonicalization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SectionTerm {
    pub coeff: Scalar,
    pub xexp: Vec<u32>,
    pub rexp: Rational,
    pub uexp: Rational,
    pub wexp: Rational,
    pub exprate: Rational,
    pub spin: usize,
}

pub fn terms(e: &SectionExpr) -> Vec<SectionTerm> {
    let d = e.ctx().d;
    let mut out = Vec::new();
    for (g, v) in e.groups() {
        for (spin, f) in v.iter().enumerate() {
            let (num, rden, uden) = f.raw_parts();
            for (m, c) in num.terms() {
                let rexp = Rational::int(exp(*m, R_SLOT) as i64 - rden as i64) + Rational::half(g.half_r as i64);
                let uexp = Rational::int(-(uden as i64)) + Rational::half(g.half_u as i64);
                out.push(SectionTerm {
                    coeff: c.clone(),
                    xexp: (0..d).map(|k| exp(*m, k)).collect(),
                    rexp,
                    uexp,
                    wexp: Rational::ZERO,
                    exprate: g.rate.clone(),
                    spin,
                });
            }
        }
    }
    out
}

/// One line per term, in the canonical order of the representation.
pub fn to_text(e: &SectionExpr) -> String {
    let mut s = String::new();
    let ts = terms(e);
    if ts.is_empty() {
        return String::from("0\n");
    }
    for t in ts {
        let xs: Vec<String> = t.xexp.iter().map(|x| format!("{x}")).collect();
        let _ = writeln!(
            s,
            "{} x^[{}] r^({}) u^({}) exp({} r) e{}",
            t.coeff,
            xs.join(","),
            t.rexp,
            t.uexp,
            t.exprate,
            t.spin
        );
    }
    s
}
