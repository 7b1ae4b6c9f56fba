//! Rational-point evaluation oracle, equality and argument scaling.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

use crate::exact::{Rational, Scalar};

use super::poly::{exp, R_SLOT};
use super::{Group, Poly, RatFn, SectionExpr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SectionError {
    #[error("evaluation oracle inapplicable: {0}")]
    OracleInapplicable(&'static str),
    #[error("scaling factor needs an irrational square root")]
    IrrationalScale,
}

/// A point of R^D where r and √r are rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    pub coords: Vec<Rational>,
    pub r: Rational,
    pub sqrt_r: Rational,
}

impl EvalPoint {
    /// Integer vector v with |v| = N, scaled by N so that r = N² and √r = N.
    pub fn from_integer_vector(v: &[i64]) -> Option<EvalPoint> {
        let sq: i64 = v.iter().map(|x| x * x).sum();
        let n = sq.isqrt();
        if n <= 0 || n * n != sq {
            return None;
        }
        let coords: Vec<Rational> = v.iter().map(|x| Rational::int(x * n)).collect();
        let last = coords.last()?;
        // reject the negative D-axis, where u = r + x_D vanishes
        let r = Rational::int(n * n);
        if (&r + last).is_zero() {
            return None;
        }
        Some(EvalPoint { coords, r, sqrt_r: Rational::int(n) })
    }

    pub fn u(&self) -> Rational {
        &self.r + self.coords.last().unwrap()
    }
}

/// `count` deterministic points in dimension d avoiding the negative D-axis
/// and the positive D-axis (so that w ≠ 0 as well).
pub fn eval_points(d: usize, count: usize, seed: u64) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut guard = 0u64;
    while out.len() < count {
        guard += 1;
        assert!(guard < 10_000_000, "could not find evaluation points");
        let v: Vec<i64> = (0..d).map(|_| (rng.next_u64() % 25) as i64 - 12).collect();
        if v[..d - 1].iter().all(|x| *x == 0) {
            continue;
        }
        if let Some(p) = EvalPoint::from_integer_vector(&v) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Value of each exp-rate block at p (the factor e^{q r} itself omitted).
pub fn evaluate(e: &SectionExpr, p: &EvalPoint) -> Result<BTreeMap<Rational, Vec<Scalar>>, SectionError> {
    let dim = e.ctx().dim();
    let mut out: BTreeMap<Rational, Vec<Scalar>> = BTreeMap::new();
    let sqrt_u = p.u().sqrt_exact();
    for (g, v) in e.groups() {
        let mut pref = Rational::ONE;
        if g.half_r {
            pref *= &p.sqrt_r;
        }
        if g.half_u {
            let s = sqrt_u.as_ref().ok_or(SectionError::OracleInapplicable("u^(1/2) is irrational at the point"))?;
            pref *= s;
        }
        let slot = out.entry(g.rate.clone()).or_insert_with(|| alloc::vec![Scalar::ZERO; dim]);
        for (i, f) in v.iter().enumerate() {
            let val = f.eval(&p.coords, &p.r).ok_or(SectionError::OracleInapplicable("pole at the point"))?;
            slot[i] += &val.scale(&pref);
        }
    }
    out.retain(|_, v| v.iter().any(|x| !x.is_zero()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equality {
    /// Canonical forms agree.
    Canonical,
    /// Canonical forms differ but every evaluation agrees; reported
    /// separately as "canonical-mismatch-eval-equal".
    EvalOnly,
    Unequal,
}

impl Equality {
    pub fn holds(self) -> bool {
        !matches!(self, Equality::Unequal)
    }
}

/// Decides e1 = e2: canonical identity first, then the evaluation oracle at
/// `points` when the canonical forms differ.
pub fn equal(e1: &SectionExpr, e2: &SectionExpr, points: &[EvalPoint]) -> Result<Equality, SectionError> {
    let diff = e1.sub(e2);
    if diff.is_zero() {
        return Ok(Equality::Canonical);
    }
    if diff.groups().iter().any(|(g, _)| g.half_u) {
        return Err(SectionError::OracleInapplicable("fractional u exponent"));
    }
    for p in points {
        if !evaluate(&diff, p)?.is_empty() {
            return Ok(Equality::Unequal);
        }
    }
    Ok(if points.is_empty() { Equality::Unequal } else { Equality::EvalOnly })
}

fn scale_ratfn(f: &RatFn, lambda: &Rational, d: usize) -> RatFn {
    let (num, rden, uden) = f.raw_parts();
    let v: Vec<_> = num
        .terms()
        .iter()
        .map(|(m, c)| {
            let deg: u32 = (0..d).map(|k| exp(*m, k)).sum::<u32>() + exp(*m, R_SLOT);
            (*m, c.scale(&lambda.pow(deg as i32)))
        })
        .collect();
    let k = lambda.pow(-((rden + uden) as i32));
    RatFn::new(Poly::from_raw(v, d).scale(&Scalar::real(k)), rden, uden, d)
}

/// ψ(x) ↦ ψ(λx) up to an overall factor √λ.
///
/// Returns the scaled section together with a flag telling whether a common
/// factor √λ has been left out (this happens when every block carries an odd
/// number of half powers of r and u). Mixed parities are rejected when √λ is
/// irrational.
pub fn scale_argument_projective(e: &SectionExpr, lambda: &Rational) -> Result<(SectionExpr, bool), SectionError> {
    assert!(lambda.signum() > 0);
    let d = e.ctx().d;
    let sqrt = lambda.sqrt_exact();
    let parities: Vec<bool> = e.groups().iter().map(|(g, _)| (g.half_r as u8 + g.half_u as u8) % 2 == 1).collect();
    let all_odd = !parities.is_empty() && parities.iter().all(|p| *p);
    let omit = all_odd && sqrt.is_none();
    let mut blocks = Vec::new();
    for ((g, v), odd) in e.groups().iter().zip(&parities) {
        let halves = g.half_r as i32 + g.half_u as i32;
        // λ^{halves/2}: integer part always, √λ only if not omitted
        let mut k = lambda.pow(halves / 2);
        if *odd && !omit {
            k *= sqrt.as_ref().ok_or(SectionError::IrrationalScale)?;
        }
        let g2 = Group { rate: &g.rate * lambda, ..g.clone() };
        let out: Vec<RatFn> = v.iter().map(|f| scale_ratfn(f, lambda, d).scale(&Scalar::real(k.clone()))).collect();
        blocks.push((g2, out));
    }
    Ok((SectionExpr::from_groups(e.ctx(), blocks), omit))
}

/// ψ(x) ↦ ψ(λx), exactly.
pub fn scale_argument(e: &SectionExpr, lambda: &Rational) -> Result<SectionExpr, SectionError> {
    match scale_argument_projective(e, lambda)? {
        (s, false) => Ok(s),
        (_, true) => Err(SectionError::IrrationalScale),
    }
}
