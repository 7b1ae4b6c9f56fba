use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::clifford::{build_rep, casimir_formula, CliffordError, RepAction};
use crate::exact::{Rational, Scalar};

use super::{Poly, RatFn, SpinMat};

/// Everything the section class needs for a fixed (n, μ): the fiber
/// representation and the gauge potential and curvature as function-valued
/// matrices.
#[derive(Debug)]
pub struct SectionCtx {
    pub n: usize,
    /// Dimension D = 2n+1 of configuration space.
    pub d: usize,
    pub mu: Rational,
    /// c = μ² + (n−1)|μ|.
    pub c: Rational,
    pub rep: RepAction,
    gauge: Vec<SpinMat>,
    field: Vec<SpinMat>,
}

impl SectionCtx {
    pub fn new(n: usize, mu: &Rational) -> Result<Arc<SectionCtx>, CliffordError> {
        let rep = build_rep(n, mu)?;
        let d = 2 * n + 1;
        let c = &casimir_formula(n, mu) / &Rational::int(n as i64);
        let dim = rep.dim;
        let g = |a: usize, b: usize| rep.gamma_ab(a, b).clone();

        // A_b = −x_a γ_ab / (r u), A_D = 0
        let inv_ru = RatFn::new(Poly::one(), 1, 1, d);
        let mut gauge = Vec::with_capacity(d);
        for b in 1..=d {
            let mut m = SpinMat::zero(dim);
            if b < d {
                for a in 1..d {
                    if a != b {
                        let f = inv_ru.mul(&RatFn::x(a), d).scale(&-Scalar::ONE);
                        m = m.add(&SpinMat::from_const(&g(a, b), &f), d);
                    }
                }
            }
            gauge.push(m);
        }

        // F_Db = x_a γ_ab / r³ and the transverse F_ab of the curvature display
        let mut field = alloc::vec![SpinMat::zero(dim); d * d];
        for b in 1..d {
            let mut m = SpinMat::zero(dim);
            for a in 1..d {
                if a != b {
                    let f = RatFn::new(Poly::x(a), 3, 0, d);
                    m = m.add(&SpinMat::from_const(&g(a, b), &f), d);
                }
            }
            field[(d - 1) * d + (b - 1)] = m.clone();
            field[(b - 1) * d + (d - 1)] = m.scale(&-Scalar::ONE);
        }
        let over = |p: Poly| RatFn::new(p, 3, 2, d);
        let xd = Poly::x(d);
        let two_r_plus_xd = Poly::r().scale(&Scalar::int(2)).add(&xd);
        let u = Poly::r().add(&xd);
        for a in 1..d {
            for b in 1..d {
                if a == b {
                    continue;
                }
                // −2 r² u γ_ab
                let mut m = SpinMat::from_const(&g(a, b), &over(u.mul_r_pow(2).scale(&Scalar::int(-2))));
                for cc in 1..d {
                    // (2r + x_D) x_c (x_a γ_cb − x_b γ_ca)
                    let xc = Poly::x(cc).mul(&two_r_plus_xd, d);
                    if cc != b {
                        m = m.add(&SpinMat::from_const(&g(cc, b), &over(xc.mul(&Poly::x(a), d))), d);
                    }
                    if cc != a {
                        m = m.sub(&SpinMat::from_const(&g(cc, a), &over(xc.mul(&Poly::x(b), d))), d);
                    }
                    // i r x_d x_c [γ_da, γ_cb]
                    for dd in 1..d {
                        if dd == a || cc == b {
                            continue;
                        }
                        let comm = g(dd, a).commutator(&g(cc, b));
                        if comm.is_zero() {
                            continue;
                        }
                        let p = Poly::x(dd).mul(&Poly::x(cc), d).mul_r_pow(1).scale(&Scalar::I);
                        m = m.add(&SpinMat::from_const(&comm, &over(p)), d);
                    }
                }
                field[(a - 1) * d + (b - 1)] = m;
            }
        }
        Ok(Arc::new(SectionCtx { n, d, mu: mu.clone(), c, rep, gauge, field }))
    }

    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    /// A_b for b ∈ 1..=D.
    pub fn gauge(&self, b: usize) -> &SpinMat {
        &self.gauge[b - 1]
    }

    /// F_αβ for α, β ∈ 1..=D.
    pub fn field(&self, alpha: usize, beta: usize) -> &SpinMat {
        &self.field[(alpha - 1) * self.d + (beta - 1)]
    }

    /// a = n − c.
    pub fn a(&self) -> Rational {
        Rational::int(self.n as i64) - &self.c
    }

    /// The Casimir scalar c₂ = n·c.
    pub fn c2(&self) -> Rational {
        &self.c * &Rational::int(self.n as i64)
    }
}
