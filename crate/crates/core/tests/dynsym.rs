use micz_core::dynsym::{
    battery, hamiltonian, hamiltonian_residual, hat, twist, untwist_projective, verify_forms, verify_hamiltonian, verify_lemma1, verify_lemma2,
    verify_theorem, Lab, Status,
};
use micz_core::exact::{Rational, Scalar};
use micz_core::ladder::highest_section;
use micz_core::sections::SectionExpr;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn lab(n: usize, mu: Rational) -> Lab {
    Lab::new(n, &mu).unwrap()
}

#[test]
fn dilation_on_constant_spinor() {
    for (n, mu) in [(1, Rational::ZERO), (1, q(1, 2)), (2, q(-1, 2))] {
        let lab = lab(n, mu);
        let d = lab.ctx.d as i32;
        let psi = SectionExpr::constant(&lab.ctx, &SectionExpr::basis_spin(&lab.ctx, 0));
        let t = lab.expanded.get(-1, d + 1).neg();
        let want = psi.scale(&Scalar::imag(Rational::new(-(d as i64 - 1), 2)));
        assert_eq!(t.apply(&psi), want);
    }
}

#[test]
fn angular_generators_commute_with_radial_conjugation() {
    let lab = lab(2, q(1, 2));
    let b = battery(&lab.ctx, 6, 3);
    for (a, c) in [(1, 2), (1, 5), (3, 4)] {
        let j = lab.expanded.get(a, c);
        let jh = hat(&j);
        for s in &b.sections {
            assert!(jh.apply(s).sub(&j.apply(s)).is_zero(), "J_{a}{c}");
        }
    }
}

#[test]
fn small_batteries_pass() {
    for (n, mu) in [(1, q(1, 2)), (2, Rational::ZERO)] {
        let lab = lab(n, mu);
        let b = battery(&lab.ctx, 4, 11);
        for rep in [verify_lemma1(&lab, &b), verify_lemma2(&lab, &b), verify_forms(&lab, &b)] {
            assert!(rep.status.passed(), "{} n={n}: {:?}", rep.check, rep.failure);
            assert_eq!(rep.residual_terms, 0);
        }
        for rep in verify_theorem(&lab, &b) {
            assert!(rep.status.passed(), "{} n={n}: {:?}", rep.check, rep.failure);
        }
    }
}

#[test]
fn hydrogen_ground_state() {
    let lab = lab(1, Rational::ZERO);
    let z = vec![0u32; lab.ctx.d];
    let psi = SectionExpr::monomial(&lab.ctx, Scalar::ONE, &z, &Rational::ZERO, &Rational::ZERO, 0, &-Rational::ONE, &SectionExpr::basis_spin(&lab.ctx, 0));
    assert_eq!(hamiltonian(&lab.ctx).apply(&psi), psi.scale_rational(&q(-1, 2)));
    assert_eq!(verify_hamiltonian(&lab, &psi, 0).status, Status::ExactPass);
    // the same section is not at level 1
    let rep = verify_hamiltonian(&lab, &psi, 1);
    assert_eq!(rep.status, Status::Fail);
    assert!(rep.failure.is_some());
}

#[test]
fn untwisted_highest_sections_are_eigen() {
    // E = −1/2, −2/9, −1/18
    for (n, mu, level, e) in [(1, Rational::ZERO, 0, q(-1, 2)), (1, q(1, 2), 0, q(-2, 9)), (2, Rational::ZERO, 1, q(-1, 18))] {
        let lab = lab(n, mu.clone());
        let hs = highest_section(&lab, level).unwrap();
        let psi = untwist_projective(&hs.section, level).unwrap();
        assert!(hamiltonian_residual(&lab.ctx, &psi, level).is_zero(), "n={n} mu={mu} I={level}");
        assert_eq!(hamiltonian(&lab.ctx).apply(&psi), psi.scale_rational(&e));
    }
}

#[test]
fn twist_round_trip() {
    // λ = 4 keeps √λ rational
    let lab = lab(1, Rational::ZERO);
    let hs = highest_section(&lab, 3).unwrap();
    let psi = untwist_projective(&hs.section, 3).unwrap();
    let back = twist(&psi, 3).unwrap();
    assert!(micz_core::ladder::proportional(&back, &hs.section).is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn battery_is_deterministic(seed in any::<u64>(), size in 1usize..25) {
        let lab = lab(1, q(1, 2));
        let a = battery(&lab.ctx, size, seed);
        let b = battery(&lab.ctx, size, seed);
        prop_assert_eq!(a.labels, b.labels);
        prop_assert!(a.sections.iter().zip(&b.sections).all(|(x, y)| x == y));
    }

    #[test]
    fn hamiltonian_is_linear(seed in any::<u64>(), k in -3i64..4) {
        let lab = lab(1, q(1, 2));
        let b = battery(&lab.ctx, 2, seed);
        let h = hamiltonian(&lab.ctx);
        let k = Scalar::frac(k, 2);
        let combo = b.sections[0].add(&b.sections[1].scale(&k));
        let lhs = h.apply(&combo);
        let rhs = h.apply(&b.sections[0]).add(&h.apply(&b.sections[1]).scale(&k));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }
}
