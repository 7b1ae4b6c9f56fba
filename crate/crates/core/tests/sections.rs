use std::sync::Arc;

use micz_core::exact::{Rational, Scalar};
use micz_core::sections::{
    equal, eval_points, evaluate, scale_argument, to_text, Equality, Poly, RatFn, SectionCtx, SectionExpr,
};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn ctx(n: usize, mu: Rational) -> Arc<SectionCtx> {
    SectionCtx::new(n, &mu).unwrap()
}

fn mono(c: &Arc<SectionCtx>, xexp: &[u32], r: Rational, u: Rational, rate: Rational, spin: usize) -> SectionExpr {
    let v = SectionExpr::basis_spin(c, spin);
    SectionExpr::monomial(c, Scalar::ONE, xexp, &r, &u, 0, &rate, &v)
}

/// A few generic sections with integer u-powers.
fn samples(c: &Arc<SectionCtx>) -> Vec<SectionExpr> {
    let d = c.d;
    let mut e = vec![0u32; d];
    e[0] = 1;
    e[d - 1] = 1;
    let mut f = vec![0u32; d];
    f[1] = 2;
    let dim = c.dim();
    vec![
        mono(c, &e, q(-1, 2), Rational::int(-1), Rational::int(-1), 0),
        mono(c, &f, Rational::int(1), Rational::int(-2), Rational::ZERO, dim - 1),
        mono(c, &vec![0; d], q(1, 2), Rational::ZERO, Rational::int(-1), dim / 2),
    ]
}

#[test]
fn derivative_examples() {
    let c = ctx(1, Rational::ZERO);
    let d = c.d;
    // ∂_1(x_1/r) = 1/r − x_1²/r³
    let e = mono(&c, &[1, 0, 0], Rational::int(-1), Rational::ZERO, Rational::ZERO, 0);
    let want = mono(&c, &[0, 0, 0], Rational::int(-1), Rational::ZERO, Rational::ZERO, 0)
        .sub(&mono(&c, &[2, 0, 0], Rational::int(-3), Rational::ZERO, Rational::ZERO, 0));
    assert_eq!(e.derive(1), want);
    // ∂_D(1/u) = −(x_D/r + 1)/u²
    let e = mono(&c, &[0, 0, 0], Rational::ZERO, Rational::int(-1), Rational::ZERO, 0);
    let want = mono(&c, &[0, 0, 1], Rational::int(-1), Rational::int(-2), Rational::ZERO, 0)
        .add(&mono(&c, &[0, 0, 0], Rational::ZERO, Rational::int(-2), Rational::ZERO, 0))
        .neg();
    assert_eq!(e.derive(d), want);
    // constants
    let v = SectionExpr::constant(&c, &[Scalar::ONE]);
    assert!(v.derive(2).is_zero());
    assert!(v.pi(d).is_zero());
}

#[test]
fn canonical_form_examples() {
    let c = ctx(2, q(1, 2));
    let d = c.d;
    let z = vec![0u32; d];
    // u = r + x_D
    let u = mono(&c, &z, Rational::ZERO, Rational::ONE, Rational::ZERO, 0);
    let mut xd = z.clone();
    xd[d - 1] = 1;
    let r = mono(&c, &z, Rational::ONE, Rational::ZERO, Rational::ZERO, 0);
    assert_eq!(u, r.add(&mono(&c, &xd, Rational::ZERO, Rational::ZERO, Rational::ZERO, 0)));
    // r² = Σx²
    let r2 = mono(&c, &z, Rational::int(2), Rational::ZERO, Rational::ZERO, 0);
    let mut sum = SectionExpr::zero(&c);
    for a in 0..d {
        let mut e = z.clone();
        e[a] = 2;
        sum = sum.add(&mono(&c, &e, Rational::ZERO, Rational::ZERO, Rational::ZERO, 0));
    }
    assert_eq!(r2, sum);
    // x_D + w = r
    let w = SectionExpr::monomial(&c, Scalar::ONE, &z, &Rational::ZERO, &Rational::ZERO, 1, &Rational::ZERO, &SectionExpr::basis_spin(&c, 0));
    assert_eq!(mono(&c, &xd, Rational::ZERO, Rational::ZERO, Rational::ZERO, 0).add(&w), r);
    // u·w/ρ-type cancellation: (r + x_D)/u = 1
    assert_eq!(u.mul_u_half(-2), mono(&c, &z, Rational::ZERO, Rational::ZERO, Rational::ZERO, 0));
    for s in samples(&c) {
        assert!(s.sub(&s).is_zero());
        assert_eq!(to_text(&s), to_text(&s.add(&SectionExpr::zero(&c))));
    }
}

#[test]
fn canonical_text_is_stable() {
    let c = ctx(1, q(1, 2));
    let e = mono(&c, &[1, 0, 1], q(-1, 2), Rational::int(-1), Rational::int(-1), 0);
    let text = to_text(&e.derive(1));
    assert_eq!(text, to_text(&e.derive(1)));
    assert!(text.lines().all(|l| l.contains("exp(-1 r)")));
    assert_eq!(to_text(&SectionExpr::zero(&c)), "0\n");
}

#[test]
fn heisenberg_relation() {
    for (n, mu) in [(1, q(1, 2)), (2, q(-1, 2)), (2, Rational::ONE)] {
        let c = ctx(n, mu);
        for s in samples(&c) {
            for a in 1..=c.d {
                for b in 1..=c.d {
                    let lhs = s.pi(b).mul_x(a).sub(&s.mul_x(a).pi(b));
                    let want = if a == b { s.scale(&Scalar::I) } else { SectionExpr::zero(&c) };
                    assert_eq!(lhs, want, "a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn gauge_potential_is_transverse() {
    for (n, mu) in [(1, q(1, 2)), (2, q(3, 2))] {
        let c = ctx(n, mu);
        for s in samples(&c) {
            let mut acc = SectionExpr::zero(&c);
            for b in 1..=c.d {
                acc = acc.add(&s.apply_gauge(b).mul_x(b));
            }
            assert!(acc.is_zero());
            assert!(s.apply_gauge(c.d).is_zero());
            // (r·π) on a constant spinor vanishes
            let v = SectionExpr::constant(&c, &SectionExpr::basis_spin(&c, 0));
            let mut rp = SectionExpr::zero(&c);
            for a in 1..=c.d {
                rp = rp.add(&v.pi(a).mul_x(a));
            }
            assert!(rp.is_zero());
        }
    }
}

#[test]
fn gauge_example_n1() {
    // A_1 v = −x_2 γ_21 v/(r u) and γ_21 = −1/2 on the μ = 1/2 fiber
    let c = ctx(1, q(1, 2));
    let v = SectionExpr::constant(&c, &[Scalar::ONE]);
    let want = SectionExpr::monomial(&c, Scalar::frac(1, 2), &[0, 1, 0], &Rational::int(-1), &Rational::int(-1), 0, &Rational::ZERO, &[Scalar::ONE]);
    assert_eq!(v.apply_gauge(1), want);
    // F_Db v = x_a γ_ab v / r³, so F_31 v = x_2 γ_21 v / r³
    let want = SectionExpr::monomial(&c, Scalar::frac(-1, 2), &[0, 1, 0], &Rational::int(-3), &Rational::ZERO, 0, &Rational::ZERO, &[Scalar::ONE]);
    assert_eq!(v.field_strength(3, 1), want);
}

#[test]
fn curvature_is_commutator_of_covariant_derivatives() {
    for (n, mu) in [(1, q(1, 2)), (1, q(-3, 2)), (2, q(1, 2)), (2, Rational::ONE)] {
        let c = ctx(n, mu);
        for s in samples(&c) {
            for a in 1..=c.d {
                for b in 1..=c.d {
                    // [∂_a, ∂_b] = 0
                    assert_eq!(s.derive(b).derive(a), s.derive(a).derive(b));
                    // F_ab = i[π_a, π_b]
                    let comm = s.pi(b).pi(a).sub(&s.pi(a).pi(b)).scale(&Scalar::I);
                    assert_eq!(comm, s.field_strength(a, b), "n={n} a={a} b={b}");
                    assert_eq!(s.field_strength(a, b), s.field_strength(b, a).neg());
                }
            }
        }
    }
}

#[test]
fn scale_argument_example() {
    let c = ctx(1, Rational::ZERO);
    let e = mono(&c, &[1, 0, 0], q(-1, 2), Rational::ZERO, Rational::int(-1), 0);
    let want = SectionExpr::monomial(&c, Scalar::int(2), &[1, 0, 0], &q(-1, 2), &Rational::ZERO, 0, &Rational::int(-4), &[Scalar::ONE]);
    assert_eq!(scale_argument(&e, &Rational::int(4)).unwrap(), want);
    assert!(scale_argument(&e, &Rational::int(2)).is_err());
}

#[test]
fn oracle_agrees_with_canonical_forms() {
    let c = ctx(2, q(1, 2));
    let pts = eval_points(c.d, 12, 99);
    let s = samples(&c);
    for a in &s {
        for b in &s {
            let sum = a.add(b);
            for p in &pts {
                let (ea, eb, es) = (evaluate(a, p).unwrap(), evaluate(b, p).unwrap(), evaluate(&sum, p).unwrap());
                for (rate, v) in &es {
                    for (i, x) in v.iter().enumerate() {
                        let mut want = Scalar::ZERO;
                        if let Some(w) = ea.get(rate) {
                            want += &w[i];
                        }
                        if let Some(w) = eb.get(rate) {
                            want += &w[i];
                        }
                        assert_eq!(*x, want);
                    }
                }
            }
        }
        assert_eq!(equal(a, a, &pts).unwrap(), Equality::Canonical);
        assert_eq!(equal(a, &a.scale(&Scalar::int(2)), &pts).unwrap(), Equality::Unequal);
    }
}

#[test]
fn oracle_checks_derivatives_through_products() {
    // d(fg) = f dg + g df evaluated at points: independent of canonical forms
    let d = 5;
    let pts = eval_points(d, 12, 3);
    let f = RatFn::new(Poly::x(1).mul(&Poly::x(5), d).add(&Poly::r()), 1, 1, d);
    let g = RatFn::new(Poly::x(2).add(&Poly::x(3).mul(&Poly::x(1), d)), 0, 2, d);
    for a in 1..=d {
        let lhs = f.mul(&g, d).deriv(a, d);
        let rhs = f.deriv(a, d).mul(&g, d).add(&f.mul(&g.deriv(a, d), d), d);
        assert_eq!(lhs, rhs);
        for p in &pts {
            assert_eq!(lhs.eval(&p.coords, &p.r), rhs.eval(&p.coords, &p.r));
        }
    }
}

fn arb_ratfn(d: usize) -> impl Strategy<Value = RatFn> {
    let term = (prop::collection::vec(0u32..3, d), 0u32..2, -3i64..4);
    (prop::collection::vec(term, 1..4), 0u32..3, 0u32..3).prop_map(move |(ts, rden, uden)| {
        let mut p = Poly::zero();
        for (xs, rp, c) in ts {
            let mut m = 0u64;
            for (k, e) in xs.iter().enumerate() {
                m += (*e as u64) << (8 * k);
            }
            m += (rp as u64) << 56;
            p = p.add(&Poly::monomial(m, Scalar::int(c), d));
        }
        RatFn::new(p, rden, uden, d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms_on_functions(f in arb_ratfn(3), g in arb_ratfn(3), h in arb_ratfn(3)) {
        let d = 3;
        prop_assert_eq!(f.mul(&g, d).mul(&h, d), f.mul(&g.mul(&h, d), d));
        prop_assert_eq!(f.mul(&g.add(&h, d), d), f.mul(&g, d).add(&f.mul(&h, d), d));
        prop_assert!(f.sub(&f, d).is_zero());
        prop_assert_eq!(f.mul(&g, d), g.mul(&f, d));
    }

    #[test]
    fn derivatives_commute_and_obey_leibniz(f in arb_ratfn(5), g in arb_ratfn(5), a in 1usize..6, b in 1usize..6) {
        let d = 5;
        prop_assert_eq!(f.deriv(a, d).deriv(b, d), f.deriv(b, d).deriv(a, d));
        let lhs = f.mul(&g, d).deriv(a, d);
        let rhs = f.deriv(a, d).mul(&g, d).add(&f.mul(&g.deriv(a, d), d), d);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_is_idempotent_and_oracle_consistent(f in arb_ratfn(3), g in arb_ratfn(3)) {
        let d = 3;
        let s = f.add(&g, d);
        let again = RatFn::new(s.num().clone(), s.rden(), s.uden(), d);
        prop_assert_eq!(&again, &s);
        for p in eval_points(d, 4, 11) {
            let lhs = s.eval(&p.coords, &p.r).unwrap();
            let rhs = &f.eval(&p.coords, &p.r).unwrap() + &g.eval(&p.coords, &p.r).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
