use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::ToPrimitive;

use super::{Rational, Scalar};

/// Exact value Σ c·π^{k/2}·√m with c ∈ Q(i), k ≥ 0 and m squarefree.
///
/// These are the numbers produced by integrating the section class: radial
/// Gamma values at half-integers bring √π, and radial rates and angular
/// factors bring square roots of rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Period {
    terms: BTreeMap<(u32, u64), Scalar>,
}

/// Splits m into (s, f) with m = s²·f and f squarefree.
fn squarefree_split(mut m: u64) -> (u64, u64) {
    assert!(m > 0);
    let mut s = 1u64;
    let mut f = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= p;
        }
        p += 1;
    }
    (s, f * m)
}

impl Period {
    pub fn zero() -> Period {
        Period::default()
    }

    pub fn rational(c: Rational) -> Period {
        Period::scalar(Scalar::real(c))
    }

    pub fn scalar(c: Scalar) -> Period {
        let mut p = Period::zero();
        p.push((0, 1), c);
        p
    }

    pub fn sqrt_pi_power(k: u32) -> Period {
        let mut p = Period::zero();
        p.push((k, 1), Scalar::ONE);
        p
    }

    /// √q for a non-negative rational q with word-sized parts.
    pub fn sqrt_rational(q: &Rational) -> Period {
        assert!(q.signum() >= 0, "square root of a negative rational");
        if q.is_zero() {
            return Period::zero();
        }
        let n = q.numer().to_u64().expect("radicand numerator too large");
        let d = q.denom().to_u64().expect("radicand denominator too large");
        // √(n/d) = √(n·d)/d
        let (s, f) = squarefree_split(n.checked_mul(d).expect("radicand too large"));
        let mut p = Period::zero();
        p.push((0, f), Scalar::real(Rational::new(s as i64, d as i64)));
        p
    }

    fn push(&mut self, key: (u32, u64), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as an element of Q(i), if it has no transcendental part.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::ZERO),
            1 => self.terms.get(&(0, 1)).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Period) -> Period {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.push(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Period {
        self.scale(&-Scalar::ONE)
    }

    pub fn sub(&self, other: &Period) -> Period {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Period {
        let mut out = Period::zero();
        for (k, v) in &self.terms {
            out.push(*k, v * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Period {
        self.scale(&Scalar::real(c.clone()))
    }

    pub fn mul(&self, other: &Period) -> Period {
        let mut out = Period::zero();
        for ((k1, m1), c1) in &self.terms {
            for ((k2, m2), c2) in &other.terms {
                let g = num_integer::gcd(*m1, *m2);
                // √m1·√m2 = g·√(m1 m2 / g²)
                let m = (m1 / g) * (m2 / g);
                out.push((k1 + k2, m), &(c1 * c2) * &Scalar::int(g as i64));
            }
        }
        out
    }

    /// Division by c·π^{k/2}; `None` if `den` has another shape or the
    /// quotient would need a negative power of π.
    pub fn div_pi_monomial(&self, den: &Period) -> Option<Period> {
        if den.terms.len() != 1 {
            return None;
        }
        let ((k, m), c) = den.terms.iter().next()?;
        if *m != 1 {
            return None;
        }
        let inv = c.recip();
        let mut out = Period::zero();
        for ((k1, m1), v) in &self.terms {
            out.push((k1.checked_sub(*k)?, *m1), v * &inv);
        }
        Some(out)
    }

    /// Quotient when it is an element of Q(i); `None` if the two values are
    /// not rationally proportional.
    pub fn ratio(&self, den: &Period) -> Option<Scalar> {
        let ((k, m), c) = den.terms.iter().next()?;
        let factor = c.recip();
        let mut q: Option<Scalar> = None;
        if den.terms.len() != 1 {
            // general denominators: proportional only if every term matches
            let first = self.terms.get(&(*k, *m))?;
            let cand = first * &factor;
            return if den.scale(&cand) == *self { Some(cand) } else { None };
        }
        for (key, v) in &self.terms {
            if *key != (*k, *m) {
                return None;
            }
            q = Some(v * &factor);
        }
        Some(q.unwrap_or(Scalar::ZERO))
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((k, m), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if *k > 0 {
                write!(f, "*pi^({k}/2)")?;
            }
            if *m > 1 {
                write!(f, "*sqrt({m})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surds_multiply() {
        let a = Period::sqrt_rational(&Rational::new(1, 2));
        let b = Period::sqrt_rational(&Rational::int(8));
        assert_eq!(a.mul(&b).as_scalar(), Some(Scalar::int(2)));
        let c = Period::sqrt_rational(&Rational::int(12));
        assert_eq!(c.ratio(&Period::sqrt_rational(&Rational::int(3))), Some(Scalar::int(2)));
        assert_eq!(c.ratio(&Period::sqrt_rational(&Rational::int(2))), None);
    }
}
