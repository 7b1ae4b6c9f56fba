//! Exact integrals over R^D of products of sections.
//!
//! In polar form x = r(sinθ·ω, cosθ) with ω ∈ S^{D−2} a term
//! c·x_t^m x_D^e r^p u^a e^{qr} separates into a Gamma integral in r, a
//! monomial integral over S^{D−2} and a θ-integral that becomes
//! ∫₀² s^k (2−s)^k (s−1)^e s^a ds with s = 1 + cosθ. Each piece is an exact
//! period; a term whose piece diverges is an error (no cancellation between
//! divergent terms is attempted).

use alloc::vec::Vec;

use crate::exact::{gamma_half, gamma_ratio, Period, Rational, Scalar};
use crate::sections::poly::{exp, R_SLOT};
use crate::sections::{Group, RatFn, SectionExpr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DivergentError {
    #[error("radial integral of r^{power} e^({rate} r) diverges")]
    Radial { power: Rational, rate: Rational },
    #[error("angular integral of (1+cos θ)^{power} diverges")]
    Angular { power: Rational },
}

/// Scalar density: groups of prefactors with one function each.
pub type Density = Vec<(Group, RatFn)>;

fn two_pow(e: &Rational) -> Period {
    // 2^e for e ∈ (1/2)Z
    let two = e.twice_as_i64().expect("half-integer exponent");
    let whole = Rational::int(2).pow(two.div_euclid(2) as i32);
    if two.rem_euclid(2) == 0 {
        Period::rational(whole)
    } else {
        Period::sqrt_rational(&Rational::int(2)).scale_rational(&whole)
    }
}

/// ∫₀^∞ r^p e^{q r} dr.
pub fn radial(p: &Rational, q: &Rational) -> Result<Period, DivergentError> {
    let err = || DivergentError::Radial { power: p.clone(), rate: q.clone() };
    if q.signum() >= 0 || *p <= -Rational::ONE {
        return Err(err());
    }
    let s = p + Rational::ONE;
    let g = gamma_half(&s).map_err(|_| err())?;
    // (−q)^{−s}
    let two = s.twice_as_i64().unwrap();
    let base = (-q).recip();
    let mut f = Period::rational(base.pow(two.div_euclid(2) as i32));
    if two.rem_euclid(2) == 1 {
        f = f.mul(&Period::sqrt_rational(&base));
    }
    Ok(g.mul(&f))
}

/// ∫_{S^{k−1}} ω^m dσ for m ∈ N^k.
pub fn sphere_monomial(m: &[u32]) -> Period {
    if m.iter().any(|e| e % 2 == 1) {
        return Period::zero();
    }
    // 2 ∏Γ((m_i+1)/2) / Γ((|m|+k)/2)
    let mut acc = Period::rational(Rational::int(2));
    for e in m {
        acc = acc.mul(&gamma_half(&Rational::new(*e as i64 + 1, 2)).unwrap());
    }
    let total: u32 = m.iter().sum::<u32>() + m.len() as u32;
    let den = gamma_half(&Rational::new(total as i64, 2)).unwrap();
    acc.div_pi_monomial(&den).expect("Gamma value at a half-integer")
}

/// ∫_{−1}^{1} (1−t²)^k t^e (1+t)^a dt.
pub fn polar(k: u32, e: u32, a: &Rational) -> Result<Period, DivergentError> {
    let mut acc = Period::zero();
    for i in 0..=k {
        // (2−s)^k = Σ C(k,i) 2^{k−i} (−s)^i
        let ci = binom(k, i) * Rational::int(2).pow((k - i) as i32) * Rational::int(if i % 2 == 0 { 1 } else { -1 });
        for l in 0..=e {
            // (s−1)^e = Σ C(e,l) s^l (−1)^{e−l}
            let cl = binom(e, l) * Rational::int(if (e - l) % 2 == 0 { 1 } else { -1 });
            let gamma = a + Rational::int((k + i + l) as i64);
            if gamma <= -Rational::ONE {
                return Err(DivergentError::Angular { power: gamma });
            }
            let g1 = &gamma + Rational::ONE;
            acc = acc.add(&two_pow(&g1).scale_rational(&(&ci * &cl / g1.clone())));
        }
    }
    Ok(acc)
}

fn binom(n: u32, k: u32) -> Rational {
    gamma_ratio(&Rational::int((n - k + 1) as i64), k as u64).unwrap() / gamma_ratio(&Rational::ONE, k as u64).unwrap()
}

/// ∫_{R^D} c·x^m r^p u^a e^{q r} d^D x; `xexp` has length D.
pub fn monomial_integral(c: &Scalar, xexp: &[u32], p: &Rational, a: &Rational, q: &Rational) -> Result<Period, DivergentError> {
    let d = xexp.len();
    let (trans, e) = (&xexp[..d - 1], xexp[d - 1]);
    let sph = sphere_monomial(trans);
    if sph.is_zero() {
        return Ok(Period::zero());
    }
    let mt: u32 = trans.iter().sum();
    let k = (mt + d as u32 - 3) / 2;
    let power = p + a + Rational::int((mt + e + d as u32 - 1) as i64);
    let rad = radial(&power, q)?;
    let th = polar(k, e, a)?;
    Ok(sph.mul(&rad).mul(&th).scale(c))
}

/// ∫_{R^D} of a density.
pub fn integrate(d: usize, dens: &Density) -> Result<Period, DivergentError> {
    let mut acc = Period::zero();
    for (g, f) in dens {
        let (num, rden, uden) = f.raw_parts();
        let a = Rational::int(-(uden as i64)) + Rational::half(g.half_u as i64);
        for (m, c) in num.terms() {
            let xexp: Vec<u32> = (0..d).map(|k| exp(*m, k)).collect();
            let p = Rational::int(exp(*m, R_SLOT) as i64 - rden as i64) + Rational::half(g.half_r as i64);
            acc = acc.add(&monomial_integral(c, &xexp, &p, &a, &g.rate)?);
        }
    }
    Ok(acc)
}

/// The pointwise fiber inner product (a, b)(x) = Σ_s g_s conj(a_s) b_s.
pub fn inner_density(a: &SectionExpr, b: &SectionExpr) -> Density {
    let ctx = a.ctx();
    let d = ctx.d;
    let mut out: Density = Vec::new();
    for (ga, va) in a.groups() {
        for (gb, vb) in b.groups() {
            let mut f = RatFn::zero();
            for s in 0..ctx.dim() {
                if va[s].is_zero() || vb[s].is_zero() {
                    continue;
                }
                let g = Scalar::real(ctx.rep.gram[s].clone());
                f = f.add(&va[s].conj().mul(&vb[s], d).scale(&g), d);
            }
            if f.is_zero() {
                continue;
            }
            let hr = ga.half_r as i32 + gb.half_r as i32;
            let hu = ga.half_u as i32 + gb.half_u as i32;
            f = f.mul_r(hr / 2, d).mul_u(hu / 2, d);
            let g = Group { rate: &ga.rate + &gb.rate, half_r: hr % 2 == 1, half_u: hu % 2 == 1 };
            match out.iter_mut().find(|(h, _)| *h == g) {
                Some((_, acc)) => *acc = acc.add(&f, d),
                None => out.push((g, f)),
            }
        }
    }
    out.retain(|(_, f)| !f.is_zero());
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// ⟨a, b⟩ = ∫ (a, b)(x) d^D x.
pub fn inner_product(a: &SectionExpr, b: &SectionExpr) -> Result<Period, DivergentError> {
    integrate(a.ctx().d, &inner_density(a, b))
}

/// c·r^p u^a w^b e^{q r}, a function of r and x_D only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonalTerm {
    pub coeff: Scalar,
    pub p: Rational,
    pub a: Rational,
    pub b: Rational,
    pub q: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZonalProfile {
    pub terms: Vec<ZonalTerm>,
}

impl ZonalProfile {
    pub fn term(coeff: Scalar, p: Rational, a: Rational, b: Rational, q: Rational) -> ZonalProfile {
        ZonalProfile { terms: alloc::vec![ZonalTerm { coeff, p, a, b, q }] }
    }

    pub fn add(&self, o: &ZonalProfile) -> ZonalProfile {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        ZonalProfile { terms }
    }

    pub fn scale(&self, k: &Scalar) -> ZonalProfile {
        ZonalProfile { terms: self.terms.iter().map(|t| ZonalTerm { coeff: &t.coeff * k, ..t.clone() }).collect() }
    }

    /// Multiplies by x_D = (u − w)/2.
    pub fn mul_xd(&self) -> ZonalProfile {
        let mut out = Vec::new();
        for t in &self.terms {
            out.push(ZonalTerm { coeff: t.coeff.scale(&Rational::half(1)), a: &t.a + Rational::ONE, ..t.clone() });
            out.push(ZonalTerm { coeff: t.coeff.scale(&Rational::half(-1)), b: &t.b + Rational::ONE, ..t.clone() });
        }
        ZonalProfile { terms: out }
    }
}

/// ∫_{R^D} zp d^D x divided by the volume of S^{D−2}.
///
/// With u = r(1+t), w = r(1−t) a term gives
/// ∫ r^{p+a+b+D−1} e^{qr} dr · 2^{a+b+D−2} B(a+n, b+n).
pub fn zonal_integral(zp: &ZonalProfile, n: usize) -> Result<Period, DivergentError> {
    let mut acc = Period::zero();
    let nn = Rational::int(n as i64);
    for t in &zp.terms {
        let power = &(&t.p + &t.a) + &(&t.b + &Rational::int(2 * n as i64));
        let rad = radial(&power, &t.q)?;
        let (x, y) = (&t.a + &nn, &t.b + &nn);
        if x.signum() <= 0 {
            return Err(DivergentError::Angular { power: t.a.clone() });
        }
        if y.signum() <= 0 {
            return Err(DivergentError::Angular { power: t.b.clone() });
        }
        // B(x, y) = Γ(x)Γ(y)/Γ(x+y)
        let num = gamma_half(&x).unwrap().mul(&gamma_half(&y).unwrap());
        let beta = num.div_pi_monomial(&gamma_half(&(&x + &y)).unwrap()).unwrap();
        let e = &(&t.a + &t.b) + &Rational::int(2 * n as i64 - 1);
        acc = acc.add(&rad.mul(&beta).mul(&two_pow(&e)).scale(&t.coeff));
    }
    Ok(acc)
}
