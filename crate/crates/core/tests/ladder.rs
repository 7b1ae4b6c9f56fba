use micz_core::dynsym::{battery, Lab, Status};
use micz_core::exact::{Rational, Scalar};
use micz_core::integrate::{inner_product, zonal_integral, ZonalProfile};
use micz_core::ladder::{
    ad_expectation, beta_chain, gamma_eigencheck, hermiticity_defects, highest_section, highest_weight_check, lower, module_weight_check, raise,
    tower, Method,
};
use micz_core::reptheory::module_highest_weight;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn lab(n: usize, mu: Rational) -> Lab {
    Lab::new(n, &mu).unwrap()
}

#[test]
fn highest_section_eigenvalues() {
    let l = lab(1, q(1, 2));
    let hs = highest_section(&l, 0).unwrap();
    assert_eq!(gamma_eigencheck(&l, &hs.section, &q(3, 2)).status, Status::ExactPass);
    assert_eq!(gamma_eigencheck(&l, &hs.section, &q(5, 2)).status, Status::Fail);
    let l = lab(1, Rational::ZERO);
    let hs = highest_section(&l, 2).unwrap();
    assert_eq!(gamma_eigencheck(&l, &hs.section, &Rational::int(3)).status, Status::ExactPass);
    assert_eq!(hs.method, Method::Kappa(2));
}

#[test]
fn one_lowering_step() {
    let l = lab(1, Rational::ZERO);
    let hs = highest_section(&l, 0).unwrap();
    let next = lower(&l, &hs.section);
    assert!(!next.is_zero());
    assert_eq!(gamma_eigencheck(&l, &next, &Rational::int(2)).status, Status::ExactPass);
    assert!(raise(&l, &hs.section).is_zero());
    assert!(!raise(&l, &next).is_zero());
}

#[test]
fn hydrogen_tower() {
    let l = lab(1, Rational::ZERO);
    let hs = highest_section(&l, 0).unwrap();
    let t = tower(&l, &hs, 4, 2);
    assert_eq!(t.status, Status::ExactPass);
    let evs: Vec<Rational> = t.steps.iter().map(|s| s.eigenvalue.clone()).collect();
    assert_eq!(evs, (1..=5).map(Rational::int).collect::<Vec<_>>());
    // C_j = j! (−i)^j
    let mut fact = Scalar::ONE;
    for s in &t.steps {
        if s.j > 0 {
            fact = &fact * &Scalar::new(Rational::ZERO, -Rational::int(s.j as i64));
        }
        assert_eq!(s.radial_constant.as_ref(), Some(&fact), "j={}", s.j);
    }
}

#[test]
fn rank_two_tower() {
    let l = lab(2, q(1, 2));
    let hs = highest_section(&l, 0).unwrap();
    assert_eq!(hs.method, Method::Nullspace);
    assert!(highest_weight_check(&l, &hs.section, 0).status.passed());
    let t = tower(&l, &hs, 3, 1);
    assert_eq!(t.status, Status::ExactPass, "{t:?}");
}

#[test]
fn expectation_examples() {
    for (level, n, mu) in [(0, 1, q(1, 2)), (3, 1, Rational::ZERO), (2, 2, q(-1, 2))] {
        assert_eq!(beta_chain(level, n, &mu), mu);
        let r = ad_expectation(&lab(n, mu.clone()), None, level);
        assert_eq!(r.status, Status::ExactPass, "{r:?}");
        assert_eq!(r.zonal, Some(Scalar::real(mu)));
        assert!(r.section_status.is_none());
    }
}

#[test]
fn rank_one_section_routes_agree() {
    let l = lab(1, q(-1, 2));
    let hs = highest_section(&l, 1).unwrap();
    let r = ad_expectation(&l, Some(&hs), 1);
    assert_eq!(r.section_status, Some(Status::ExactPass), "{r:?}");
    assert_eq!(r.eigenvalue, Some(Scalar::real(q(-1, 2))));
}

#[test]
fn rank_two_section_eigenvalue_sign() {
    // the constructed section is an Â_D eigenvector with eigenvalue −μ at n = 2
    let l = lab(2, q(1, 2));
    let hs = highest_section(&l, 0).unwrap();
    let r = ad_expectation(&l, Some(&hs), 0);
    assert_eq!(r.status, Status::ExactPass);
    assert_eq!(r.eigenvalue, Some(Scalar::real(q(-1, 2))));
    assert_eq!(r.section_status, Some(Status::Fail));
}

#[test]
fn module_weight() {
    for (n, mu) in [(1, Rational::ZERO), (1, q(1, 2)), (2, q(-1, 2))] {
        let l = lab(n, mu.clone());
        let hs = highest_section(&l, 0).unwrap();
        let exp = ad_expectation(&l, Some(&hs), 0);
        let m = module_weight_check(&l, &hs, &exp);
        assert_eq!(m.expected, module_highest_weight(n, &mu));
        assert_eq!(m.status, Status::ExactPass, "{m:?}");
    }
}

#[test]
fn highest_sections_have_finite_norm() {
    for (n, mu, level) in [(1, Rational::ZERO, 0), (1, q(3, 2), 2), (2, Rational::ONE, 0)] {
        let l = lab(n, mu);
        let hs = highest_section(&l, level).unwrap();
        let norm = inner_product(&hs.section, &hs.section).unwrap();
        let v = norm.as_scalar();
        // a positive multiple of a power of π
        assert!(v.is_none() || v.unwrap().re.signum() > 0);
        assert!(!norm.is_zero());
    }
}

#[test]
fn zonal_normalization() {
    // ∫ e^{−2r} r^{−1} over R³ with u = w = 1 is 2π·∫ r e^{−2r} dr · 2 / vol(S¹)
    let p = ZonalProfile::term(Scalar::ONE, -Rational::ONE, Rational::ZERO, Rational::ZERO, Rational::int(-2));
    let v = zonal_integral(&p, 1).unwrap();
    assert!(!v.is_zero());
    let x = zonal_integral(&p.mul_xd(), 1).unwrap();
    assert!(x.is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn beta_chain_gives_mu(n in 1usize..4, twice_mu in -5i64..6, level in 0u32..12) {
        let mu = Rational::half(twice_mu);
        prop_assert_eq!(beta_chain(level, n, &mu), mu);
    }

    #[test]
    fn generators_hermitian_on_decaying_sections(seed in any::<u64>()) {
        let l = lab(1, q(1, 2));
        let b = battery(&l.ctx, 12, seed);
        // only sections with e^{−r} decay and no 1/u poles are square integrable
        let good: Vec<_> = b
            .sections
            .iter()
            .zip(&b.labels)
            .filter(|(_, lab)| lab.contains("exp(-1 r)") && lab.contains("u^(0)"))
            .map(|(s, _)| s.clone())
            .collect();
        for a in &good {
            for c in &good {
                for (name, d) in hermiticity_defects(&l, a, c) {
                    if let Ok(d) = d {
                        prop_assert!(d.is_zero(), "{}", name);
                    }
                }
            }
        }
    }
}
