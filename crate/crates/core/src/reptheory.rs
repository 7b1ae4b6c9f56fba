//! Weyl dimensions and interlacing branching for so(2n+1) and so(2n).

use alloc::vec::Vec;
use core::fmt;

use crate::exact::Rational;
use crate::spectrum::energy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    /// so(2n+1)
    B,
    /// so(2n)
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub algebra: Algebra,
    pub comps: Vec<Rational>,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.algebra {
            Algebra::B => 'B',
            Algebra::D => 'D',
        };
        write!(f, "{}{}(", tag, self.rank())?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("weight {0} is not dominant integral")]
pub struct NonDominantError(pub Weight);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("level {level}: Weyl dimension {weyl} but branching sum {branched}")]
pub struct MismatchError {
    pub level: u32,
    pub weyl: u64,
    pub branched: u64,
}

impl Weight {
    pub fn new(algebra: Algebra, comps: Vec<Rational>) -> Weight {
        Weight { algebra, comps }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_dominant(&self) -> bool {
        let c = &self.comps;
        if c.is_empty() || !c.iter().all(|x| x.is_half_integer_valued()) {
            return false;
        }
        let frac = |x: &Rational| x.twice_as_i64().unwrap().rem_euclid(2);
        if c.iter().any(|x| frac(x) != frac(&c[0])) {
            return false;
        }
        let n = c.len();
        if c.windows(2).take(n.saturating_sub(2)).any(|w| w[0] < w[1]) {
            return false;
        }
        match self.algebra {
            Algebra::B => (n < 2 || c[n - 2] >= c[n - 1]) && c[n - 1].signum() >= 0,
            Algebra::D => n < 2 || c[n - 2] >= c[n - 1].abs(),
        }
    }

    fn rho(&self) -> Vec<Rational> {
        let n = self.rank() as i64;
        (1..=n)
            .map(|i| match self.algebra {
                Algebra::B => Rational::int(n - i) + Rational::half(1),
                Algebra::D => Rational::int(n - i),
            })
            .collect()
    }
}

/// ∏_{α>0} ⟨λ+ρ, α⟩/⟨ρ, α⟩.
pub fn weyl_dim(w: &Weight) -> Result<u64, NonDominantError> {
    if !w.is_dominant() {
        return Err(NonDominantError(w.clone()));
    }
    let rho = w.rho();
    let l: Vec<Rational> = w.comps.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = Rational::ONE;
    let mut den = Rational::ONE;
    let n = w.rank();
    for i in 0..n {
        for j in i + 1..n {
            num *= &(&l[i] - &l[j]);
            num *= &(&l[i] + &l[j]);
            den *= &(&rho[i] - &rho[j]);
            den *= &(&rho[i] + &rho[j]);
        }
        if w.algebra == Algebra::B {
            num *= &l[i];
            den *= &rho[i];
        }
    }
    let d = num / den;
    Ok(d.to_i64().filter(|v| *v > 0).expect("Weyl dimension is a positive integer") as u64)
}

/// All x ≡ `like` mod 1 with lo ≤ x ≤ hi, increasing.
fn lattice(lo: &Rational, hi: &Rational, like: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let offset = (like - &Rational::from_big(like.floor(), 1.into())).clone();
    let mut x = Rational::from_big((lo - &offset).floor(), 1.into()) + offset;
    if x < *lo {
        x += &Rational::ONE;
    }
    while x <= *hi {
        out.push(x.clone());
        x += &Rational::ONE;
    }
    out
}

/// so(2n+1) ↓ so(2n): m₁ ≥ m′₁ ≥ m₂ ≥ … ≥ m_n ≥ |m′_n|.
pub fn branch_b_to_d(w: &Weight) -> Result<Vec<Weight>, NonDominantError> {
    assert_eq!(w.algebra, Algebra::B);
    if !w.is_dominant() {
        return Err(NonDominantError(w.clone()));
    }
    let m = &w.comps;
    let n = m.len();
    let mut out: Vec<Vec<Rational>> = alloc::vec![Vec::new()];
    for i in 0..n {
        let hi = &m[i];
        let mut next = Vec::new();
        for prefix in &out {
            let range = if i + 1 < n { lattice(&m[i + 1], hi, hi) } else { lattice(&-m[n - 1].clone(), hi, hi) };
            for x in range {
                let mut p = prefix.clone();
                p.push(x);
                next.push(p);
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|c| Weight::new(Algebra::D, c)).collect())
}

/// so(2n+2) ↓ so(2n+1): M₁ ≥ m₁ ≥ M₂ ≥ … ≥ m_n ≥ |M_{n+1}|.
pub fn branch_d_to_b(w: &Weight) -> Result<Vec<Weight>, NonDominantError> {
    assert_eq!(w.algebra, Algebra::D);
    if !w.is_dominant() || w.rank() < 2 {
        return Err(NonDominantError(w.clone()));
    }
    let big = &w.comps;
    let n = big.len() - 1;
    let mut out: Vec<Vec<Rational>> = alloc::vec![Vec::new()];
    for i in 0..n {
        let lo = if i + 1 < n { big[i + 1].clone() } else { big[n].abs() };
        let mut next = Vec::new();
        for prefix in &out {
            for x in lattice(&lo, &big[i], &big[i]) {
                let mut p = prefix.clone();
                p.push(x);
                next.push(p);
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|c| Weight::new(Algebra::B, c)).collect())
}

/// (I+|μ|, |μ|, …, |μ|, μ) of so(2n+2): the level-I eigenspace.
pub fn level_weight(level: u32, n: usize, mu: &Rational) -> Weight {
    let a = mu.abs();
    let mut c = alloc::vec![a.clone(); n + 1];
    c[0] = &a + Rational::int(level as i64);
    c[n] = mu.clone();
    Weight::new(Algebra::D, c)
}

/// (l+|μ|, |μ|, …, |μ|) of so(2n+1).
pub fn orbital_weight(l: u32, n: usize, mu: &Rational) -> Weight {
    let a = mu.abs();
    let mut c = alloc::vec![a.clone(); n];
    c[0] = &a + Rational::int(l as i64);
    Weight::new(Algebra::B, c)
}

/// (|μ|, …, |μ|, μ) of so(2n): the fiber representation.
pub fn fiber_weight(n: usize, mu: &Rational) -> Weight {
    let mut c = alloc::vec![mu.abs(); n];
    c[n - 1] = mu.clone();
    Weight::new(Algebra::D, c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyRow {
    pub level: u32,
    pub energy: Rational,
    pub dim: u64,
}

/// dim H_I from the Weyl formula, checked against Σ_{l≤I} dim of the
/// so(2n+1) pieces.
pub fn degeneracy_table(n: usize, mu: &Rational, imax: u32) -> Result<Vec<DegeneracyRow>, MismatchError> {
    let mut rows = Vec::new();
    for level in 0..=imax {
        let weyl = weyl_dim(&level_weight(level, n, mu)).unwrap();
        let branched: u64 = (0..=level).map(|l| weyl_dim(&orbital_weight(l, n, mu)).unwrap()).sum();
        if weyl != branched {
            return Err(MismatchError { level, weyl, branched });
        }
        rows.push(DegeneracyRow { level, energy: energy(level, n, mu), dim: weyl });
    }
    Ok(rows)
}

/// (−(n+|μ|), |μ|, …, |μ|, μ): the highest weight of the bound-state
/// module of so(2, 2n+2), with H₀ first.
pub fn module_highest_weight(n: usize, mu: &Rational) -> Vec<Rational> {
    let mut v = alloc::vec![-(Rational::int(n as i64) + mu.abs())];
    v.extend(level_weight(0, n, mu).comps);
    v
}
