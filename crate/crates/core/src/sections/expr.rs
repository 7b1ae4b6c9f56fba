use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{Rational, Scalar};
use crate::matrix::Matrix;

use super::poly::{x_unit, Poly};
use super::{RatFn, SectionCtx, SpinMat};

/// Transcendental prefactor shared by a block of terms:
/// e^{rate·r} · r^{1/2 if half_r} · u^{1/2 if half_u}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Group {
    pub rate: Rational,
    pub half_r: bool,
    pub half_u: bool,
}

impl Group {
    pub fn plain() -> Group {
        Group { rate: Rational::ZERO, half_r: false, half_u: false }
    }
}

/// A section of the twisted spinor bundle in canonical form: a sum over
/// groups of spinor vectors of canonical functions.
#[derive(Clone)]
pub struct SectionExpr {
    ctx: Arc<SectionCtx>,
    groups: Vec<(Group, Vec<RatFn>)>,
}

impl PartialEq for SectionExpr {
    fn eq(&self, other: &SectionExpr) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) && self.groups == other.groups
    }
}

impl SectionExpr {
    pub fn zero(ctx: &Arc<SectionCtx>) -> SectionExpr {
        SectionExpr { ctx: ctx.clone(), groups: Vec::new() }
    }

    /// Builds a section from arbitrary (possibly repeated) group blocks.
    pub fn from_groups(ctx: &Arc<SectionCtx>, blocks: Vec<(Group, Vec<RatFn>)>) -> SectionExpr {
        let mut s = SectionExpr { ctx: ctx.clone(), groups: Vec::new() };
        s.absorb(blocks);
        s
    }

    fn absorb(&mut self, mut blocks: Vec<(Group, Vec<RatFn>)>) {
        let d = self.ctx.d;
        blocks.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Group, Vec<RatFn>)> = Vec::with_capacity(blocks.len());
        for (g, v) in blocks {
            match out.last_mut() {
                Some((lg, lv)) if *lg == g => {
                    for (a, b) in lv.iter_mut().zip(&v) {
                        *a = a.add(b, d);
                    }
                }
                _ => out.push((g, v)),
            }
        }
        out.retain(|(_, v)| v.iter().any(|f| !f.is_zero()));
        self.groups = out;
    }

    /// c · x^m · r^{rexp} · u^{uexp} · w^{wexp} · e^{rate·r} ⊗ spin, where rexp
    /// and uexp are half-integers and wexp ≥ 0.
    #[allow(clippy::too_many_arguments)]
    pub fn monomial(
        ctx: &Arc<SectionCtx>,
        coeff: Scalar,
        xexp: &[u32],
        rexp: &Rational,
        uexp: &Rational,
        wexp: u32,
        rate: &Rational,
        spin: &[Scalar],
    ) -> SectionExpr {
        let d = ctx.d;
        assert_eq!(xexp.len(), d);
        assert_eq!(spin.len(), ctx.dim());
        let two_r = rexp.twice_as_i64().expect("half-integer r exponent");
        let two_u = uexp.twice_as_i64().expect("half-integer u exponent");
        let half_r = two_r.rem_euclid(2) == 1;
        let half_u = two_u.rem_euclid(2) == 1;
        let mut m: u64 = 0;
        for (k, e) in xexp.iter().enumerate() {
            m += *e as u64 * x_unit(k + 1);
        }
        let mut f = RatFn::from_poly(Poly::monomial(m, coeff, d));
        f = f.mul_r(((two_r - half_r as i64) / 2) as i32, d);
        f = f.mul_u(((two_u - half_u as i64) / 2) as i32, d);
        if wexp > 0 {
            let w = Poly::r().sub(&Poly::x(d)).pow(wexp, d);
            f = f.mul_poly(&w, d);
        }
        let v = spin.iter().map(|s| f.scale(s)).collect();
        SectionExpr::from_groups(ctx, alloc::vec![(Group { rate: rate.clone(), half_r, half_u }, v)])
    }

    /// Constant spinor section v.
    pub fn constant(ctx: &Arc<SectionCtx>, spin: &[Scalar]) -> SectionExpr {
        let z = alloc::vec![0; ctx.d];
        Self::monomial(ctx, Scalar::ONE, &z, &Rational::ZERO, &Rational::ZERO, 0, &Rational::ZERO, spin)
    }

    /// Basis spinor e_i.
    pub fn basis_spin(ctx: &SectionCtx, i: usize) -> Vec<Scalar> {
        let mut v = alloc::vec![Scalar::ZERO; ctx.dim()];
        v[i] = Scalar::ONE;
        v
    }

    pub fn ctx(&self) -> &Arc<SectionCtx> {
        &self.ctx
    }

    pub fn groups(&self) -> &[(Group, Vec<RatFn>)] {
        &self.groups
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    /// Number of canonical terms (numerator monomials over all components).
    pub fn term_count(&self) -> usize {
        self.groups.iter().flat_map(|(_, v)| v.iter()).map(RatFn::term_count).sum()
    }

    fn map(&self, f: impl Fn(&Group, &[RatFn]) -> Vec<(Group, Vec<RatFn>)>) -> SectionExpr {
        let mut blocks = Vec::with_capacity(self.groups.len());
        for (g, v) in &self.groups {
            blocks.extend(f(g, v));
        }
        SectionExpr::from_groups(&self.ctx, blocks)
    }

    pub fn add(&self, o: &SectionExpr) -> SectionExpr {
        debug_assert!(Arc::ptr_eq(&self.ctx, &o.ctx));
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut blocks = self.groups.clone();
        blocks.extend(o.groups.iter().cloned());
        SectionExpr::from_groups(&self.ctx, blocks)
    }

    pub fn sub(&self, o: &SectionExpr) -> SectionExpr {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> SectionExpr {
        self.scale(&-Scalar::ONE)
    }

    pub fn scale(&self, k: &Scalar) -> SectionExpr {
        if k.is_zero() {
            return SectionExpr::zero(&self.ctx);
        }
        let groups = self.groups.iter().map(|(g, v)| (g.clone(), v.iter().map(|f| f.scale(k)).collect())).collect();
        SectionExpr { ctx: self.ctx.clone(), groups }
    }

    pub fn scale_rational(&self, k: &Rational) -> SectionExpr {
        self.scale(&Scalar::real(k.clone()))
    }

    /// Sum of scaled sections.
    pub fn combination(ctx: &Arc<SectionCtx>, parts: &[(Scalar, &SectionExpr)]) -> SectionExpr {
        let mut blocks = Vec::new();
        for (k, s) in parts {
            if k.is_zero() {
                continue;
            }
            for (g, v) in &s.groups {
                blocks.push((g.clone(), v.iter().map(|f| f.scale(k)).collect()));
            }
        }
        SectionExpr::from_groups(ctx, blocks)
    }

    pub fn mul_fn(&self, f: &RatFn) -> SectionExpr {
        let d = self.ctx.d;
        self.map(|g, v| alloc::vec![(g.clone(), v.iter().map(|x| x.mul(f, d)).collect())])
    }

    pub fn mul_x(&self, alpha: usize) -> SectionExpr {
        let p = Poly::x(alpha);
        let d = self.ctx.d;
        self.map(|g, v| alloc::vec![(g.clone(), v.iter().map(|x| x.mul_poly(&p, d)).collect())])
    }

    /// Multiplies by r^{k/2}.
    pub fn mul_r_half(&self, k: i32) -> SectionExpr {
        let d = self.ctx.d;
        self.map(|g, v| {
            let total = k + g.half_r as i32;
            let half_r = total.rem_euclid(2) == 1;
            let whole = (total - half_r as i32) / 2;
            let g2 = Group { half_r, ..g.clone() };
            alloc::vec![(g2, v.iter().map(|x| x.mul_r(whole, d)).collect())]
        })
    }

    /// Multiplies by u^{k/2}.
    pub fn mul_u_half(&self, k: i32) -> SectionExpr {
        let d = self.ctx.d;
        self.map(|g, v| {
            let total = k + g.half_u as i32;
            let half_u = total.rem_euclid(2) == 1;
            let whole = (total - half_u as i32) / 2;
            let g2 = Group { half_u, ..g.clone() };
            alloc::vec![(g2, v.iter().map(|x| x.mul_u(whole, d)).collect())]
        })
    }

    /// Multiplies by w^k = (r − x_D)^k, k ≥ 0.
    pub fn mul_w(&self, k: u32) -> SectionExpr {
        let d = self.ctx.d;
        let w = Poly::r().sub(&Poly::x(d)).pow(k, d);
        self.map(|g, v| alloc::vec![(g.clone(), v.iter().map(|x| x.mul_poly(&w, d)).collect())])
    }

    pub fn mul_exp(&self, q: &Rational) -> SectionExpr {
        self.map(|g, v| alloc::vec![(Group { rate: &g.rate + q, ..g.clone() }, v.to_vec())])
    }

    /// Constant matrix on the fiber.
    pub fn mul_spin(&self, m: &Matrix) -> SectionExpr {
        self.map(|g, v| {
            let out = (0..v.len())
                .map(|i| {
                    let mut acc = RatFn::zero();
                    for (j, f) in v.iter().enumerate() {
                        if !m[(i, j)].is_zero() && !f.is_zero() {
                            acc = acc.add(&f.scale(&m[(i, j)]), self.ctx.d);
                        }
                    }
                    acc
                })
                .collect();
            alloc::vec![(g.clone(), out)]
        })
    }

    pub fn mul_spinmat(&self, m: &SpinMat) -> SectionExpr {
        if m.is_zero() {
            return SectionExpr::zero(&self.ctx);
        }
        let d = self.ctx.d;
        self.map(|g, v| alloc::vec![(g.clone(), m.apply(v, d))])
    }

    /// Exact ∂_α.
    pub fn derive(&self, alpha: usize) -> SectionExpr {
        let d = self.ctx.d;
        self.map(|g, v| {
            // logarithmic derivative of the group prefactor
            let mut l = RatFn::zero();
            if !g.rate.is_zero() {
                l = l.add(&RatFn::new(Poly::x(alpha).scale(&Scalar::real(g.rate.clone())), 1, 0, d), d);
            }
            if g.half_u {
                let mut p = Poly::x(alpha);
                if alpha == d {
                    p = p.add(&Poly::r());
                }
                l = l.add(&RatFn::new(p.scale(&Scalar::frac(1, 2)), 1, 1, d), d);
            }
            if g.half_r {
                l = l.add(&RatFn::new(Poly::x(alpha).scale(&Scalar::frac(1, 2)), 2, 0, d), d);
            }
            let out = v
                .iter()
                .map(|f| {
                    let df = f.deriv(alpha, d);
                    if l.is_zero() || f.is_zero() {
                        df
                    } else {
                        df.add(&f.mul(&l, d), d)
                    }
                })
                .collect();
            alloc::vec![(g.clone(), out)]
        })
    }

    /// Multiplication by the gauge potential A_b.
    pub fn apply_gauge(&self, b: usize) -> SectionExpr {
        let ctx = self.ctx.clone();
        self.mul_spinmat(ctx.gauge(b))
    }

    /// π_α = −i(∂_α + iA_α).
    pub fn pi(&self, alpha: usize) -> SectionExpr {
        let a = self.derive(alpha).scale(&-Scalar::I);
        a.add(&self.apply_gauge(alpha))
    }

    /// ∇_α = ∂_α + iA_α.
    pub fn nabla(&self, alpha: usize) -> SectionExpr {
        self.derive(alpha).add(&self.apply_gauge(alpha).scale(&Scalar::I))
    }

    /// Multiplication by the curvature F_αβ.
    pub fn field_strength(&self, alpha: usize, beta: usize) -> SectionExpr {
        let ctx = self.ctx.clone();
        self.mul_spinmat(ctx.field(alpha, beta))
    }

    /// Complex conjugate of the component functions (basis kept).
    pub fn conj_components(&self) -> SectionExpr {
        let groups = self.groups.iter().map(|(g, v)| (g.clone(), v.iter().map(RatFn::conj).collect())).collect();
        SectionExpr { ctx: self.ctx.clone(), groups }
    }
}

impl fmt::Debug for SectionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::to_text(self))
    }
}
