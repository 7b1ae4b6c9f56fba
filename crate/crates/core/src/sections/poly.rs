//! Polynomials in x_1..x_D and r over Q(i), reduced modulo r² = Σx².
//!
//! The normal form eliminates x_1²: every monomial has x_1-degree ≤ 1 and
//! arbitrary r-degree. Since Σx² is monic of degree 2 in x_1, this is a
//! canonical representative of the class in Q(i)[x, r]/(r² − Σx²).

use alloc::vec::Vec;

use crate::exact::Scalar;

/// Packed exponent vector: byte k holds the exponent of x_{k+1} for k < 7,
/// byte 7 holds the exponent of r.
pub type Mono = u64;

pub const R_SLOT: usize = 7;

#[inline]
pub fn unit(slot: usize) -> Mono {
    1u64 << (8 * slot)
}

#[inline]
pub fn exp(m: Mono, slot: usize) -> u32 {
    ((m >> (8 * slot)) & 0xff) as u32
}

#[inline]
pub fn x_unit(alpha: usize) -> Mono {
    unit(alpha - 1)
}

#[inline]
pub fn set_exp(m: Mono, slot: usize, e: u32) -> Mono {
    debug_assert!(e < 256);
    (m & !(0xffu64 << (8 * slot))) | ((e as u64) << (8 * slot))
}

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Poly {
    terms: Vec<(Mono, Scalar)>,
}

/// Sorts, merges equal monomials and drops zero coefficients.
fn collect(mut v: Vec<(Mono, Scalar)>) -> Vec<(Mono, Scalar)> {
    v.sort_unstable_by_key(|t| t.0);
    let mut out: Vec<(Mono, Scalar)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc += &c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if lc.is_zero() {
            out.pop();
        }
    }
    out
}

/// Rewrites x_1² → r² − x_2² − … − x_D² until every x_1-degree is ≤ 1.
fn reduce_x1(v: Vec<(Mono, Scalar)>, d: usize) -> Vec<(Mono, Scalar)> {
    if v.iter().all(|(m, _)| exp(*m, 0) < 2) {
        return collect(v);
    }
    let mut done = Vec::with_capacity(v.len() * 2);
    let mut work = v;
    while let Some((m, c)) = work.pop() {
        let e = exp(m, 0);
        if e < 2 {
            done.push((m, c));
            continue;
        }
        let base = m - 2 * unit(0);
        work.push((base + 2 * unit(R_SLOT), c.clone()));
        let neg = -c;
        for alpha in 2..=d {
            work.push((base + 2 * x_unit(alpha), neg.clone()));
        }
    }
    collect(done)
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::term(0, c)
    }

    pub fn one() -> Poly {
        Poly::constant(Scalar::ONE)
    }

    /// A single monomial; must already be reduced (x_1-degree ≤ 1).
    pub fn term(m: Mono, c: Scalar) -> Poly {
        assert!(exp(m, 0) < 2, "unreduced monomial");
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: alloc::vec![(m, c)] }
        }
    }

    /// Monomial with arbitrary exponents, reduced on construction.
    pub fn monomial(m: Mono, c: Scalar, d: usize) -> Poly {
        Poly { terms: reduce_x1(alloc::vec![(m, c)], d) }
    }

    pub fn x(alpha: usize) -> Poly {
        Poly::term(x_unit(alpha), Scalar::ONE)
    }

    pub fn r() -> Poly {
        Poly::term(unit(R_SLOT), Scalar::ONE)
    }

    pub(crate) fn from_raw(v: Vec<(Mono, Scalar)>, d: usize) -> Poly {
        Poly { terms: reduce_x1(v, d) }
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// Multiplies by a monomial times a scalar.
    pub fn mul_term(&self, m: Mono, k: &Scalar, d: usize) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        let v: Vec<_> = self.terms.iter().map(|(a, c)| (a + m, c * k)).collect();
        if exp(m, 0) == 0 {
            // shifting by a monomial free of x_1 preserves order and reducedness
            Poly { terms: v }
        } else {
            Poly { terms: reduce_x1(v, d) }
        }
    }

    pub fn mul(&self, o: &Poly, d: usize) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(o.terms[0].0, &o.terms[0].1, d);
        }
        if self.terms.len() == 1 {
            return o.mul_term(self.terms[0].0, &self.terms[0].1, d);
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (a, c) in &self.terms {
            for (b, e) in &o.terms {
                v.push((a + b, c * e));
            }
        }
        Poly { terms: reduce_x1(v, d) }
    }

    pub fn pow(&self, k: u32, d: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self, d);
        }
        acc
    }

    /// Formal partial derivative in the slot variable (r held independent).
    pub fn partial(&self, slot: usize) -> Poly {
        let mut v = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = exp(*m, slot);
            if e > 0 {
                v.push((m - unit(slot), c.scale(&crate::exact::Rational::int(e as i64))));
            }
        }
        // lowering one exponent keeps distinct monomials distinct but may reorder
        v.sort_unstable_by_key(|t| t.0);
        Poly { terms: v }
    }

    /// Smallest r-exponent present, or `None` for zero.
    pub fn min_r_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| exp(*m, R_SLOT)).min()
    }

    /// Divides by r^k; caller guarantees every term has r-degree ≥ k.
    pub fn shift_r_down(&self, k: u32) -> Poly {
        let s = k as u64 * unit(R_SLOT);
        Poly { terms: self.terms.iter().map(|(m, c)| (m - s, c.clone())).collect() }
    }

    /// Substitutes r → −x_D (all terms r-free afterwards).
    pub fn at_r_minus_xd(&self, d: usize) -> Poly {
        let v = self
            .terms
            .iter()
            .map(|(m, c)| {
                let k = exp(*m, R_SLOT);
                let m2 = set_exp(*m, R_SLOT, 0) + k as u64 * x_unit(d);
                (m2, if k % 2 == 1 { -c } else { c.clone() })
            })
            .collect();
        Poly { terms: collect(v) }
    }

    /// Exact quotient by u = r + x_D, if it exists in the ring.
    ///
    /// Synthetic division in r; the divisibility test is that the remainder,
    /// N(r = −x_D), vanishes identically (it has x_1-degree ≤ 1 so it is
    /// already canonical modulo the transverse Σx_a²).
    pub fn div_u(&self, d: usize) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if !self.at_r_minus_xd(d).is_zero() {
            return None;
        }
        // group coefficients by r-degree
        let top = self.terms.iter().map(|(m, _)| exp(*m, R_SLOT)).max().unwrap();
        let mut by_deg: Vec<Vec<(Mono, Scalar)>> = alloc::vec![Vec::new(); top as usize + 1];
        for (m, c) in &self.terms {
            let k = exp(*m, R_SLOT) as usize;
            by_deg[k].push((set_exp(*m, R_SLOT, 0), c.clone()));
        }
        // q_{top-1} = N_top, q_{k-1} = N_k − x_D q_k
        let xd = x_unit(d);
        let mut out: Vec<(Mono, Scalar)> = Vec::new();
        let mut q: Vec<(Mono, Scalar)> = Vec::new();
        for k in (1..=top as usize).rev() {
            let mut next: Vec<(Mono, Scalar)> = core::mem::take(&mut by_deg[k]);
            for (m, c) in &q {
                next.push((m + xd, -c));
            }
            q = collect(next);
            let rk = (k as u64 - 1) * unit(R_SLOT);
            out.extend(q.iter().map(|(m, c)| (m + rk, c.clone())));
        }
        Some(Poly { terms: collect(out) })
    }

    /// Multiplies by u = r + x_D.
    pub fn mul_u(&self, d: usize) -> Poly {
        let mut v = Vec::with_capacity(2 * self.terms.len());
        for (m, c) in &self.terms {
            v.push((m + unit(R_SLOT), c.clone()));
            v.push((m + x_unit(d), c.clone()));
        }
        Poly { terms: collect(v) }
    }

    pub fn mul_r_pow(&self, k: u32) -> Poly {
        let s = k as u64 * unit(R_SLOT);
        Poly { terms: self.terms.iter().map(|(m, c)| (m + s, c.clone())).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        Poly { terms: collect(self.terms.iter().map(|(m, c)| (*m, f(c))).collect()) }
    }

    pub fn conj(&self) -> Poly {
        self.map_coeffs(Scalar::conj)
    }
}
