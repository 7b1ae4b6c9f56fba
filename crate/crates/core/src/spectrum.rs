//! Laguerre polynomials, the bound-state spectrum and exact radial integrals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exact::{gamma_ratio, Rational};

/// E_I = −1/(2(I + n + |μ|)²).
pub fn energy(level: u32, n: usize, mu: &Rational) -> Rational {
    let s = level_shift(level, n, mu);
    -(&s * &s * Rational::int(2)).recip()
}

/// I_μ + 1 = I + n + |μ|, the scale of the twist and the bottom Γ̂₋₁
/// eigenvalue of level I.
pub fn level_shift(level: u32, n: usize, mu: &Rational) -> Rational {
    Rational::int(level as i64 + n as i64) + mu.abs()
}

/// l_μ = l + |μ| + n − 1.
pub fn l_mu(l: u32, n: usize, mu: &Rational) -> Rational {
    Rational::int(l as i64 + n as i64 - 1) + mu.abs()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerrePoly {
    pub degree: usize,
    pub alpha: Rational,
    /// Coefficient of x^j at index j.
    pub coeffs: Vec<Rational>,
}

impl LaguerrePoly {
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::ZERO, |acc, c| acc * x + c)
    }
}

/// L^α_m through (k+1)L_{k+1} = (2k+1+α−x)L_k − (k+α)L_{k−1}.
pub fn laguerre(m: usize, alpha: &Rational) -> LaguerrePoly {
    let mut prev: Vec<Rational> = alloc::vec![Rational::ONE];
    if m == 0 {
        return LaguerrePoly { degree: 0, alpha: alpha.clone(), coeffs: prev };
    }
    let mut cur = alloc::vec![alpha + Rational::ONE, -Rational::ONE];
    for k in 1..m {
        let kk = Rational::int(k as i64);
        let a = &(&kk * &Rational::int(2)) + &(alpha + Rational::ONE);
        let b = &kk + alpha;
        let mut next = alloc::vec![Rational::ZERO; k + 2];
        for (j, c) in cur.iter().enumerate() {
            next[j] += &(&a * c);
            next[j + 1] -= c;
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= &(&b * c);
        }
        let inv = Rational::int(k as i64 + 1).recip();
        for c in next.iter_mut() {
            *c *= &inv;
        }
        prev = cur;
        cur = next;
    }
    LaguerrePoly { degree: m, alpha: alpha.clone(), coeffs: cur }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RadialError {
    #[error("integral of r^{power} e^({rate} r) over (0, ∞) diverges or is not a Gamma value at an integer")]
    Divergent { power: Rational, rate: Rational },
    #[error("residual of the radial equation is nonzero")]
    NonZeroResidual(RadialExpr),
    #[error("square root of {0} is irrational")]
    Irrational(Rational),
}

/// Finite sum of c·r^p·e^{q r} with rational p, q and c.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadialExpr {
    /// (p, q) ↦ c, zero coefficients never stored
    terms: BTreeMap<(Rational, Rational), Rational>,
}

impl RadialExpr {
    pub fn zero() -> RadialExpr {
        RadialExpr::default()
    }

    pub fn term(c: Rational, p: Rational, q: Rational) -> RadialExpr {
        let mut e = RadialExpr::zero();
        e.push(p, q, c);
        e
    }

    fn push(&mut self, p: Rational, q: Rational, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (p, q);
        let slot = self.terms.entry(key.clone()).or_insert(Rational::ZERO);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Polynomial Σ a_j (s·r)^j times r^p e^{q r}.
    pub fn poly_times(coeffs: &[Rational], s: &Rational, p: &Rational, q: &Rational) -> RadialExpr {
        let mut e = RadialExpr::zero();
        let mut sp = Rational::ONE;
        for (j, a) in coeffs.iter().enumerate() {
            e.push(p + Rational::int(j as i64), q.clone(), a * &sp);
            sp *= s;
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational, &Rational)> {
        self.terms.iter().map(|((p, q), c)| (p, q, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &RadialExpr) -> RadialExpr {
        let mut e = self.clone();
        for ((p, q), c) in &o.terms {
            e.push(p.clone(), q.clone(), c.clone());
        }
        e
    }

    pub fn scale(&self, k: &Rational) -> RadialExpr {
        let mut e = RadialExpr::zero();
        for ((p, q), c) in &self.terms {
            e.push(p.clone(), q.clone(), c * k);
        }
        e
    }

    pub fn sub(&self, o: &RadialExpr) -> RadialExpr {
        self.add(&o.scale(&-Rational::ONE))
    }

    pub fn mul(&self, o: &RadialExpr) -> RadialExpr {
        let mut e = RadialExpr::zero();
        for ((p, q), c) in &self.terms {
            for ((p2, q2), c2) in &o.terms {
                e.push(p + p2, q + q2, c * c2);
            }
        }
        e
    }

    pub fn mul_rpow(&self, k: &Rational) -> RadialExpr {
        let mut e = RadialExpr::zero();
        for ((p, q), c) in &self.terms {
            e.push(p + k, q.clone(), c.clone());
        }
        e
    }

    pub fn deriv(&self) -> RadialExpr {
        let mut e = RadialExpr::zero();
        for ((p, q), c) in &self.terms {
            e.push(p - Rational::ONE, q.clone(), c * p);
            e.push(p.clone(), q.clone(), c * q);
        }
        e
    }

    /// ∫₀^∞ self dr, each term through Γ(p+1)/(−q)^{p+1} with p a
    /// non-negative integer and q < 0.
    pub fn integrate(&self) -> Result<Rational, RadialError> {
        let mut acc = Rational::ZERO;
        for ((p, q), c) in &self.terms {
            let div = || RadialError::Divergent { power: p.clone(), rate: q.clone() };
            let pi = p.to_i64().filter(|v| *v >= 0).ok_or_else(div)?;
            if q.signum() >= 0 {
                return Err(div());
            }
            let fact = gamma_ratio(&Rational::ONE, pi as u64).map_err(|_| div())?;
            acc += &(c * &fact * (-q).pow(-(pi as i32) - 1));
        }
        Ok(acc)
    }
}

/// The unnormalized profile r^{l_μ+1−n} L^{2l_μ+1}_{k−1}(2r/λ) e^{−r/λ},
/// λ = k + l_μ.
pub fn radial_profile(k: u32, l: u32, n: usize, mu: &Rational) -> RadialExpr {
    assert!(k >= 1);
    let lm = l_mu(l, n, mu);
    let lambda = &lm + Rational::int(k as i64);
    let lag = laguerre(k as usize - 1, &(&lm * &Rational::int(2) + Rational::ONE));
    let p = &lm + Rational::int(1 - n as i64);
    RadialExpr::poly_times(&lag.coeffs, &(Rational::int(2) / &lambda), &p, &-lambda.recip())
}

/// The radial Schrödinger operator applied to the profile, minus E R.
pub fn radial_ode_residual(k: u32, l: u32, n: usize, mu: &Rational) -> RadialExpr {
    let r = radial_profile(k, l, n, mu);
    let lm = l_mu(l, n, mu);
    let e = energy(k - 1 + l, n, mu);
    let nn = Rational::int(n as i64);
    let d1 = r.deriv();
    let d2 = d1.deriv();
    let half = Rational::half(1);
    // −(1/2r^{2n}) ∂ r^{2n} ∂ R = −½R'' − (n/r)R'
    let cent = &(&lm * &(&lm + Rational::ONE)) - &(&nn * &(&nn - Rational::ONE));
    d2.scale(&-half.clone())
        .sub(&d1.mul_rpow(&-Rational::ONE).scale(&nn))
        .add(&r.mul_rpow(&Rational::int(-2)).scale(&(&cent * &half)))
        .sub(&r.mul_rpow(&-Rational::ONE))
        .sub(&r.scale(&e))
}

/// c(k,l)², fixed by ∫|R|² r^{2n} dr = 1.
pub fn normalization(k: u32, l: u32, n: usize, mu: &Rational) -> Result<Rational, RadialError> {
    let r = radial_profile(k, l, n, mu);
    let norm = r.mul(&r).mul_rpow(&Rational::int(2 * n as i64)).integrate()?;
    assert!(norm.signum() > 0);
    Ok(norm.recip())
}

/// The twisted profile λ^{n+1} r^{−1/2} R(λr) without c(k,l) and without
/// the factor λ^{l_μ+2}, together with λ^{l_μ+2} squared.
fn twisted_parts(k: u32, l: u32, n: usize, mu: &Rational) -> (RadialExpr, Rational) {
    let lm = l_mu(l, n, mu);
    let lambda = &lm + Rational::int(k as i64);
    let lag = laguerre(k as usize - 1, &(&lm * &Rational::int(2) + Rational::ONE));
    let p = &lm + Rational::int(1 - n as i64) - Rational::half(1);
    let prof = RadialExpr::poly_times(&lag.coeffs, &Rational::int(2), &p, &-Rational::ONE);
    // λ^{n+1} · λ^{l_μ+1−n} = λ^{l_μ+2}
    let two = (&lm * &Rational::int(2)).to_i64().unwrap() as i32;
    (prof, lambda.pow(two + 4))
}

/// ∫ R̃_k R̃_k' r^{2n} dr for normalized R; must be δ_kk'.
pub fn twisted_radial_gram(k: u32, k2: u32, l: u32, n: usize, mu: &Rational) -> Result<Rational, RadialError> {
    let (a, sa) = twisted_parts(k, l, n, mu);
    let (b, sb) = twisted_parts(k2, l, n, mu);
    let integral = a.mul(&b).mul_rpow(&Rational::int(2 * n as i64)).integrate()?;
    if integral.is_zero() {
        return Ok(Rational::ZERO);
    }
    let sq = &(&normalization(k, l, n, mu)? * &normalization(k2, l, n, mu)?) * &(&sa * &sb);
    let c = sq.sqrt_exact().ok_or_else(|| RadialError::Irrational(sq.clone()))?;
    Ok(&c * &integral)
}
