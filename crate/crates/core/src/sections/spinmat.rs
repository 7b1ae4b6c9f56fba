use alloc::vec::Vec;

use crate::exact::Scalar;
use crate::matrix::Matrix;

use super::RatFn;

/// Square matrix of functions acting on the spinor fiber.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinMat {
    dim: usize,
    entries: Vec<RatFn>,
}

impl SpinMat {
    pub fn zero(dim: usize) -> SpinMat {
        SpinMat { dim, entries: alloc::vec![RatFn::zero(); dim * dim] }
    }

    /// Constant matrix times a scalar function.
    pub fn from_const(m: &Matrix, f: &RatFn) -> SpinMat {
        let dim = m.rows();
        let mut out = SpinMat::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                if !m[(i, j)].is_zero() {
                    out.entries[i * dim + j] = f.scale(&m[(i, j)]);
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFn {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFn::is_zero)
    }

    pub fn add(&self, o: &SpinMat, d: usize) -> SpinMat {
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b, d)).collect();
        SpinMat { dim: self.dim, entries }
    }

    pub fn sub(&self, o: &SpinMat, d: usize) -> SpinMat {
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b, d)).collect();
        SpinMat { dim: self.dim, entries }
    }

    pub fn scale(&self, k: &Scalar) -> SpinMat {
        SpinMat { dim: self.dim, entries: self.entries.iter().map(|a| a.scale(k)).collect() }
    }

    pub fn mul_fn(&self, f: &RatFn, d: usize) -> SpinMat {
        SpinMat { dim: self.dim, entries: self.entries.iter().map(|a| a.mul(f, d)).collect() }
    }

    pub fn mul(&self, o: &SpinMat, d: usize) -> SpinMat {
        let n = self.dim;
        let mut out = SpinMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let e = &mut out.entries[i * n + j];
                        *e = e.add(&a.mul(b, d), d);
                    }
                }
            }
        }
        out
    }

    /// Entrywise ∂_α.
    pub fn deriv(&self, alpha: usize, d: usize) -> SpinMat {
        SpinMat { dim: self.dim, entries: self.entries.iter().map(|a| a.deriv(alpha, d)).collect() }
    }

    pub fn apply(&self, v: &[RatFn], d: usize) -> Vec<RatFn> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let mut acc = RatFn::zero();
                for (j, vj) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !vj.is_zero() {
                        acc = acc.add(&a.mul(vj, d), d);
                    }
                }
                acc
            })
            .collect()
    }
}
