use micz_core::exact::{beta_quotient, gamma_half, gamma_ratio, Period, Rational, Scalar};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-400i64..400, 1i64..60).prop_map(|(n, d)| q(n, d))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(a, b)| Scalar::new(a, b))
}

/// Half-integers that stay clear of the poles of Γ for small shifts.
fn positive_half() -> impl Strategy<Value = Rational> {
    (1i64..30).prop_map(Rational::half)
}

#[test]
fn gamma_ratio_examples() {
    assert_eq!(gamma_ratio(&q(-3, 7), 0).unwrap(), Rational::ONE);
    assert_eq!(gamma_ratio(&q(1, 2), 2).unwrap(), q(3, 4));
    assert_eq!(gamma_ratio(&Rational::int(2), 3).unwrap(), Rational::int(24));
}

#[test]
fn beta_quotient_examples() {
    assert_eq!(beta_quotient(&q(7, 2), &q(3, 2), 0).unwrap(), Rational::ONE);
    assert_eq!(beta_quotient(&Rational::int(2), &Rational::int(3), 1).unwrap(), q(3, 5));
    assert_eq!(beta_quotient(&Rational::int(2), &Rational::int(1), 1).unwrap(), q(1, 3));
}

#[test]
fn gamma_half_matches_ratio() {
    // Γ(9/2) = (7/2)(5/2)(3/2)(1/2)√π
    let g = gamma_half(&q(9, 2)).unwrap();
    let want = Period::sqrt_pi_power(1).scale_rational(&gamma_ratio(&q(1, 2), 4).unwrap());
    assert_eq!(g, want);
}

#[test]
fn parse_roundtrip() {
    for s in ["0", "1/2", "-3/2", "7"] {
        let v: Rational = s.parse().unwrap();
        assert_eq!(v.to_string(), s);
    }
    assert_eq!("4/-6".parse::<Rational>().ok(), Some(q(-2, 3)));
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rational::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Rational::ONE);
        }
    }

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Scalar::ONE);
        }
    }

    #[test]
    fn display_parse_roundtrip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn gamma_ratio_composes(x in positive_half(), k1 in 0u64..8, k2 in 0u64..8) {
        let lhs = gamma_ratio(&x, k1 + k2).unwrap();
        let rhs = gamma_ratio(&x, k1).unwrap() * gamma_ratio(&(&x + Rational::int(k1 as i64)), k2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn beta_quotient_first_step(p in positive_half(), r in positive_half()) {
        prop_assert_eq!(beta_quotient(&p, &r, 1).unwrap(), &r / &(&p + &r));
    }

    #[test]
    fn beta_quotient_inverts(p in positive_half(), r in positive_half(), k in 1i64..5) {
        let up = beta_quotient(&p, &r, k).unwrap();
        let down = beta_quotient(&p, &(&r + Rational::int(k)), -k).unwrap();
        prop_assert_eq!(up * down, Rational::ONE);
    }
}
