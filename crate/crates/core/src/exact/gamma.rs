use super::{Period, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Gamma pole: factor x+{offset} vanishes for x = {x}")]
pub struct PoleError {
    pub x: Rational,
    pub offset: u64,
}

/// Rising factorial Γ(x+k)/Γ(x) = x(x+1)…(x+k−1).
pub fn gamma_ratio(x: &Rational, k: u64) -> Result<Rational, PoleError> {
    let mut acc = Rational::ONE;
    let mut f = x.clone();
    for j in 0..k {
        if f.is_zero() {
            return Err(PoleError { x: x.clone(), offset: j });
        }
        acc *= &f;
        f += &Rational::ONE;
    }
    Ok(acc)
}

/// B(p, q+dq) / B(p, q) = Γ(q+dq)Γ(p+q) / (Γ(q)Γ(p+q+dq)).
///
/// Negative `dq` is handled as the reciprocal of the positive shift from q+dq.
pub fn beta_quotient(p: &Rational, q: &Rational, dq: i64) -> Result<Rational, PoleError> {
    if dq < 0 {
        let q2 = q + Rational::int(dq);
        return Ok(beta_quotient(p, &q2, -dq)?.recip());
    }
    let k = dq as u64;
    let num = gamma_ratio(q, k)?;
    let den = gamma_ratio(&(p + q), k)?;
    if den.is_zero() {
        return Err(PoleError { x: p + q, offset: 0 });
    }
    Ok(num / den)
}

/// Γ(x) for x ∈ (1/2)Z away from the poles, as an exact multiple of 1 or √π.
pub fn gamma_half(x: &Rational) -> Result<Period, PoleError> {
    let two_x = x.twice_as_i64().expect("gamma_half needs a half-integer argument");
    if two_x <= 0 && two_x % 2 == 0 {
        return Err(PoleError { x: x.clone(), offset: 0 });
    }
    // Walk up to the base point 1 or 1/2, then back down through the recurrence.
    let (base, base_val) = if two_x % 2 == 0 {
        (Rational::ONE, Period::rational(Rational::ONE))
    } else {
        (Rational::half(1), Period::sqrt_pi_power(1))
    };
    if *x >= base {
        let k = (x - &base).to_i64().unwrap() as u64;
        let r = gamma_ratio(&base, k)?;
        Ok(base_val.scale_rational(&r))
    } else {
        let k = (&base - x).to_i64().unwrap() as u64;
        let r = gamma_ratio(x, k)?;
        Ok(base_val.scale_rational(&r.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(gamma_ratio(&q(7, 3), 0).unwrap(), Rational::ONE);
        assert_eq!(gamma_ratio(&q(1, 2), 2).unwrap(), q(3, 4));
        assert_eq!(gamma_ratio(&Rational::int(2), 3).unwrap(), Rational::int(24));
        assert!(gamma_ratio(&Rational::int(-2), 3).is_err());
        assert!(gamma_ratio(&Rational::int(-2), 2).is_ok());
    }

    #[test]
    fn beta_quotient_examples() {
        assert_eq!(beta_quotient(&q(5, 2), &q(1, 2), 0).unwrap(), Rational::ONE);
        assert_eq!(beta_quotient(&Rational::int(2), &Rational::int(3), 1).unwrap(), q(3, 5));
        assert_eq!(beta_quotient(&Rational::int(2), &Rational::int(1), 1).unwrap(), q(1, 3));
        let up = beta_quotient(&q(3, 2), &q(5, 2), 2).unwrap();
        let down = beta_quotient(&q(3, 2), &q(9, 2), -2).unwrap();
        assert_eq!(up * down, Rational::ONE);
    }

    #[test]
    fn gamma_half_values() {
        assert_eq!(gamma_half(&Rational::int(5)).unwrap(), Period::rational(Rational::int(24)));
        assert_eq!(gamma_half(&q(5, 2)).unwrap(), Period::sqrt_pi_power(1).scale_rational(&q(3, 4)));
        assert_eq!(gamma_half(&q(-1, 2)).unwrap(), Period::sqrt_pi_power(1).scale_rational(&Rational::int(-2)));
        assert!(gamma_half(&Rational::int(0)).is_err());
        assert!(gamma_half(&Rational::int(-3)).is_err());
    }
}
