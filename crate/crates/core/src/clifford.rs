//! Gamma matrices for so(2n), the chiral spinors s_± and the irreducible
//! representations s^{2μ} with highest weight (|μ|,…,|μ|,μ).
//!
//! Weights are measured with h_j = γ_{2j−1,2j}. The chirality element is
//! i^n γ_1⋯γ_{2n}; s_+ is its +1 eigenspace and contains the weight
//! (1/2,…,1/2).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::exact::{Rational, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("Casimir operator is not a scalar matrix")]
    NotScalar,
    #[error("unsupported representation: {0}")]
    Unsupported(&'static str),
}

#[derive(Debug, Clone)]
pub struct GammaSystem {
    pub n: usize,
    pub dim: usize,
    pub gammas: Vec<Matrix>,
}

fn pauli() -> [Matrix; 4] {
    let z = Scalar::ZERO;
    let o = Scalar::ONE;
    let i = Scalar::I;
    [
        Matrix::identity(2),
        Matrix::from_rows(vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]]),
        Matrix::from_rows(vec![vec![z.clone(), -&i], vec![i.clone(), z.clone()]]),
        Matrix::from_rows(vec![vec![o.clone(), z.clone()], vec![z, -o]]),
    ]
}

/// Hermitian generators of Cl(2n) by iterated tensor doubling:
/// γ_{2j−1} = σ_z^{⊗(j−1)} ⊗ σ_x ⊗ 1, γ_{2j} = σ_z^{⊗(j−1)} ⊗ σ_y ⊗ 1.
pub fn build_gamma(n: usize) -> GammaSystem {
    assert!(n >= 1);
    let [one, sx, sy, sz] = pauli();
    let mut gammas = Vec::with_capacity(2 * n);
    for j in 0..n {
        for s in [&sx, &sy] {
            let mut m = Matrix::identity(1);
            for slot in 0..n {
                let f = match slot.cmp(&j) {
                    core::cmp::Ordering::Less => &sz,
                    core::cmp::Ordering::Equal => s,
                    core::cmp::Ordering::Greater => &one,
                };
                m = m.kron(f);
            }
            gammas.push(m);
        }
    }
    GammaSystem { n, dim: 1 << n, gammas }
}

impl GammaSystem {
    /// γ_ab = (i/4)[γ_a, γ_b], 1-based indices.
    pub fn gamma_ab(&self, a: usize, b: usize) -> Matrix {
        let c = self.gammas[a - 1].commutator(&self.gammas[b - 1]);
        c.scale(&Scalar::imag(Rational::new(1, 4)))
    }

    pub fn chirality(&self) -> Matrix {
        let mut m = Matrix::identity(self.dim);
        for g in &self.gammas {
            m = m.mul(g);
        }
        m.scale(&Scalar::I.pow(self.n as u32))
    }
}

/// (P_+, P_−) = ((1 ± chirality)/2).
pub fn chiral_split(gs: &GammaSystem) -> (Matrix, Matrix) {
    let c = gs.chirality();
    let id = Matrix::identity(gs.dim);
    let half = Scalar::frac(1, 2);
    (id.add(&c).scale(&half), id.sub(&c).scale(&half))
}

/// A concrete representation of so(2n) on an orthogonal weight basis.
///
/// The basis is ordered by decreasing weight, so index 0 is the highest
/// weight vector. It is orthogonal but not normalized: `gram[i]` is the
/// squared norm of basis vector i, and the γ_ab are hermitian for that
/// inner product.
#[derive(Debug, Clone)]
pub struct RepAction {
    pub n: usize,
    pub mu: Rational,
    pub dim: usize,
    pub gram: Vec<Rational>,
    pub weights: Vec<Vec<Rational>>,
    table: Vec<Matrix>,
}

impl RepAction {
    fn slot(&self, a: usize, b: usize) -> usize {
        let m = 2 * self.n;
        (a - 1) * m + (b - 1)
    }

    /// γ_ab on the representation space (1-based, antisymmetric, γ_aa = 0).
    pub fn gamma_ab(&self, a: usize, b: usize) -> &Matrix {
        &self.table[self.slot(a, b)]
    }

    pub fn highest_weight(&self) -> &[Rational] {
        &self.weights[0]
    }

    /// Hermitian inner product Σ conj(v_i)·g_i·w_i.
    pub fn inner(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        let mut acc = Scalar::ZERO;
        for i in 0..self.dim {
            acc += &(&(&v[i].conj() * &w[i]) * &Scalar::real(self.gram[i].clone()));
        }
        acc
    }
}

/// Multisets of size k from `0..m`, as sorted exponent vectors.
fn compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in compositions(m - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::ONE, |a, b| a * Rational::int(b))
}

/// The irreducible so(2n)-module s^{2μ}: trivial for μ = 0, otherwise the
/// cyclic submodule of Sym^{2|μ|}(s_{sign μ}) through its highest weight
/// vector.
pub fn build_rep(n: usize, mu: &Rational) -> Result<RepAction, CliffordError> {
    let two_mu = mu.twice_as_i64().ok_or(CliffordError::Unsupported("μ must be a half-integer"))?;
    let k = two_mu.unsigned_abs() as usize;
    if n > 4 || k > 8 {
        return Err(CliffordError::Unsupported("outside the supported (n, μ) range"));
    }
    let gs = build_gamma(n);
    let cartan: Vec<Matrix> = (1..=n).map(|j| gs.gamma_ab(2 * j - 1, 2 * j)).collect();

    if k == 0 {
        let m = 2 * n;
        return Ok(RepAction {
            n,
            mu: mu.clone(),
            dim: 1,
            gram: vec![Rational::ONE],
            weights: vec![vec![Rational::ZERO; n]],
            table: vec![Matrix::zeros(1, 1); m * m],
        });
    }

    // chiral half: basis vectors of the tensor construction are weight vectors
    let chir = gs.chirality();
    let sign = if two_mu > 0 { Scalar::ONE } else { -Scalar::ONE };
    let half: Vec<usize> = (0..gs.dim).filter(|&i| chir[(i, i)] == sign).collect();
    let hw = |idx: usize| -> Vec<Rational> { cartan.iter().map(|h| h[(idx, idx)].re.clone()).collect() };

    // Sym^k on polynomial monomials y^α in the half-spinor coordinates;
    // a matrix X acts as the derivation Σ X_ji y_j ∂/∂y_i.
    let monos = compositions(half.len(), k);
    let index: BTreeMap<Vec<usize>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let big = monos.len();
    let sym_gram: Vec<Rational> = monos
        .iter()
        .map(|a| a.iter().fold(Rational::ONE, |acc, &e| acc * factorial(e)) / factorial(k))
        .collect();
    let mono_weight = |a: &Vec<usize>| -> Vec<Rational> {
        let mut w = vec![Rational::ZERO; n];
        for (slot, &e) in a.iter().enumerate() {
            for (j, x) in hw(half[slot]).into_iter().enumerate() {
                w[j] += &(x * Rational::int(e as i64));
            }
        }
        w
    };
    let sym_action = |x: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(big, big);
        for (col, a) in monos.iter().enumerate() {
            for (si, &i) in half.iter().enumerate() {
                if a[si] == 0 {
                    continue;
                }
                for (sj, &j) in half.iter().enumerate() {
                    let c = &x[(j, i)];
                    if c.is_zero() {
                        continue;
                    }
                    let mut b = a.clone();
                    b[si] -= 1;
                    b[sj] += 1;
                    let row = index[&b];
                    let t = c * &Scalar::int(a[si] as i64);
                    out[(row, col)] += &t;
                }
            }
        }
        out
    };
    let m = 2 * n;
    let mut sym_table = Vec::with_capacity(m * m);
    for a in 1..=m {
        for b in 1..=m {
            sym_table.push(if a == b { Matrix::zeros(big, big) } else { sym_action(&gs.gamma_ab(a, b)) });
        }
    }

    // highest weight monomial: lexicographically largest weight
    let weights_all: Vec<Vec<Rational>> = monos.iter().map(mono_weight).collect();
    let top = (0..big).max_by(|&x, &y| weights_all[x].cmp(&weights_all[y])).unwrap();

    // cyclic span by repeated application, kept in echelon form
    let mut span: Vec<Vec<Scalar>> = Vec::new();
    let mut echelon: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let mut queue = vec![{
        let mut v = vec![Scalar::ZERO; big];
        v[top] = Scalar::ONE;
        v
    }];
    while let Some(v) = queue.pop() {
        let mut r = v.clone();
        for (p, row) in &echelon {
            if !r[*p].is_zero() {
                let f = r[*p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= &(&f * y);
                }
            }
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { continue };
        let inv = r[p].recip();
        let r: Vec<Scalar> = r.iter().map(|x| x * &inv).collect();
        for (_, row) in echelon.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &(&f * y);
                }
            }
        }
        echelon.push((p, r));
        span.push(v.clone());
        for g in &sym_table {
            if !g.is_zero() {
                queue.push(g.apply(&v));
            }
        }
    }

    // orthogonal weight basis: project the span onto weight spaces and
    // Gram-Schmidt inside each
    let sym_inner = |v: &[Scalar], w: &[Scalar]| -> Scalar {
        let mut acc = Scalar::ZERO;
        for i in 0..big {
            if !v[i].is_zero() && !w[i].is_zero() {
                acc += &(&(&v[i].conj() * &w[i]) * &Scalar::real(sym_gram[i].clone()));
            }
        }
        acc
    };
    let mut by_weight: BTreeMap<Vec<Rational>, Vec<Vec<Scalar>>> = BTreeMap::new();
    for v in &span {
        let mut parts: BTreeMap<Vec<Rational>, Vec<Scalar>> = BTreeMap::new();
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                parts.entry(weights_all[i].clone()).or_insert_with(|| vec![Scalar::ZERO; big])[i] = x.clone();
            }
        }
        for (w, p) in parts {
            by_weight.entry(w).or_default().push(p);
        }
    }
    let mut basis: Vec<(Vec<Rational>, Vec<Scalar>)> = Vec::new();
    for (w, vecs) in by_weight.into_iter().rev() {
        let mut ortho: Vec<Vec<Scalar>> = Vec::new();
        for v in vecs {
            let mut r = v.clone();
            for b in &ortho {
                let f = &sym_inner(b, &r) / &sym_inner(b, b);
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= &(&f * y);
                }
            }
            if r.iter().any(|x| !x.is_zero()) {
                ortho.push(r);
            }
        }
        for b in ortho {
            basis.push((w.clone(), b));
        }
    }
    let dim = basis.len();
    let gram: Vec<Rational> = basis.iter().map(|(_, b)| sym_inner(b, b).re).collect();
    let mut table = Vec::with_capacity(m * m);
    for g in &sym_table {
        let mut out = Matrix::zeros(dim, dim);
        if !g.is_zero() {
            for (i, (_, bi)) in basis.iter().enumerate() {
                let img = g.apply(bi);
                for (j, (_, bj)) in basis.iter().enumerate() {
                    let c = sym_inner(bj, &img);
                    if !c.is_zero() {
                        out[(j, i)] = &c / &Scalar::real(gram[j].clone());
                    }
                }
            }
        }
        table.push(out);
    }
    Ok(RepAction { n, mu: mu.clone(), dim, gram, weights: basis.into_iter().map(|(w, _)| w).collect(), table })
}

/// λ with (1/2)Σ_{a,b} γ_ab γ_ab = λ·Id.
pub fn casimir_scalar(rep: &RepAction) -> Result<Rational, CliffordError> {
    let m = 2 * rep.n;
    let mut c = Matrix::zeros(rep.dim, rep.dim);
    for a in 1..=m {
        for b in (a + 1)..=m {
            let g = rep.gamma_ab(a, b);
            c = c.add(&g.mul(g));
        }
    }
    match c.scalar_value() {
        Some(l) if l.is_real() => Ok(l.re),
        _ => Err(CliffordError::NotScalar),
    }
}

/// n(μ² + (n−1)|μ|).
pub fn casimir_formula(n: usize, mu: &Rational) -> Rational {
    let n = Rational::int(n as i64);
    let a = mu.abs();
    &n * &(&a * &a + (&n - Rational::ONE) * &a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn gammas_anticommute_and_are_hermitian() {
        for n in 1..=3 {
            let gs = build_gamma(n);
            for a in 0..2 * n {
                assert_eq!(gs.gammas[a].adjoint(), gs.gammas[a]);
                for b in 0..2 * n {
                    let ac = gs.gammas[a].anticommutator(&gs.gammas[b]);
                    let want = if a == b { Matrix::identity(gs.dim).scale(&Scalar::int(2)) } else { Matrix::zeros(gs.dim, gs.dim) };
                    assert_eq!(ac, want, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn gamma12_spectrum_for_n1() {
        let g = build_gamma(1).gamma_ab(1, 2);
        let mut diag = [g[(0, 0)].clone(), g[(1, 1)].clone()];
        diag.sort_by(|a, b| a.re.cmp(&b.re));
        assert_eq!(diag, [Scalar::frac(-1, 2), Scalar::frac(1, 2)]);
        assert!(g[(0, 1)].is_zero());
    }

    #[test]
    fn chiral_projectors() {
        for n in 1..=2 {
            let gs = build_gamma(n);
            let (p, m) = chiral_split(&gs);
            assert_eq!(p.add(&m), Matrix::identity(gs.dim));
            assert_eq!(p.mul(&p), p);
            assert_eq!(p.rank(), 1 << (n - 1));
            assert_eq!(m.rank(), 1 << (n - 1));
            for a in 1..=2 * n {
                for b in a + 1..=2 * n {
                    assert!(p.commutator(&gs.gamma_ab(a, b)).is_zero());
                }
            }
        }
        // n=1: γ_12 is +1/2 on the + half
        let gs = build_gamma(1);
        let (p, _) = chiral_split(&gs);
        let g = gs.gamma_ab(1, 2);
        assert_eq!(g.mul(&p), p.scale(&Scalar::frac(1, 2)));
    }

    #[test]
    fn rep_examples() {
        let cases = [(1, q(0, 1), 1, q(0, 1)), (1, q(1, 2), 1, q(1, 4)), (2, q(1, 2), 2, q(3, 2)), (2, q(1, 1), 3, q(4, 1)), (1, q(-3, 2), 1, q(9, 4))];
        for (n, mu, dim, c2) in cases {
            let rep = build_rep(n, &mu).unwrap();
            assert_eq!(rep.dim, dim, "n={n} mu={mu}");
            assert_eq!(casimir_scalar(&rep).unwrap(), c2, "n={n} mu={mu}");
            let top: Vec<Rational> = (0..n).map(|j| if j + 1 == n { mu.clone() } else { mu.abs() }).collect();
            assert_eq!(rep.highest_weight(), top.as_slice());
        }
    }
}
