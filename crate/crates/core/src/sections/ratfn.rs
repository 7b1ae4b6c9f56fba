//! Elements N / (r^S u^T) of the function field, in canonical form.
//!
//! With N reduced (see `poly`) and S, T minimal, the triple (N, S, T) is
//! unique: r is prime in the coordinate ring of the cone r² = Σx² and u is
//! a non-zero-divisor modulo powers of r, so the set of admissible
//! denominators has a single minimal element.

use crate::exact::{Rational, Scalar};

use super::poly::{exp, unit, x_unit, Poly, R_SLOT};

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct RatFn {
    num: Poly,
    rden: u32,
    uden: u32,
}

impl RatFn {
    pub fn zero() -> RatFn {
        RatFn::default()
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(Poly::one())
    }

    pub fn constant(c: Scalar) -> RatFn {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn from_poly(num: Poly) -> RatFn {
        RatFn { num, rden: 0, uden: 0 }
    }

    /// N / (r^S u^T), brought to canonical form.
    pub fn new(num: Poly, rden: u32, uden: u32, d: usize) -> RatFn {
        let mut f = RatFn { num, rden, uden };
        f.canonicalize(d);
        f
    }

    pub fn x(alpha: usize) -> RatFn {
        RatFn::from_poly(Poly::x(alpha))
    }

    /// r^k for any integer k.
    pub fn r_pow(k: i32) -> RatFn {
        if k >= 0 {
            RatFn::from_poly(Poly::term(k as u64 * unit(R_SLOT), Scalar::ONE))
        } else {
            RatFn { num: Poly::one(), rden: (-k) as u32, uden: 0 }
        }
    }

    /// u^k for any integer k.
    pub fn u_pow(k: i32, d: usize) -> RatFn {
        if k >= 0 {
            RatFn::from_poly(Poly::r().add(&Poly::x(d)).pow(k as u32, d))
        } else {
            RatFn { num: Poly::one(), rden: 0, uden: (-k) as u32 }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn rden(&self) -> u32 {
        self.rden
    }

    pub fn uden(&self) -> u32 {
        self.uden
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn canonicalize(&mut self, d: usize) {
        if self.num.is_zero() {
            self.rden = 0;
            self.uden = 0;
            return;
        }
        loop {
            let mut changed = false;
            if self.rden > 0 {
                let k = self.num.min_r_degree().unwrap().min(self.rden);
                if k > 0 {
                    self.num = self.num.shift_r_down(k);
                    self.rden -= k;
                    changed = true;
                }
            }
            while self.uden > 0 {
                match self.num.div_u(d) {
                    Some(q) => {
                        self.num = q;
                        self.uden -= 1;
                        changed = true;
                    }
                    None => break,
                }
            }
            if !changed || self.rden == 0 {
                break;
            }
        }
    }

    /// Numerator over the larger denominator r^rden u^uden.
    pub(crate) fn lift(&self, rden: u32, uden: u32, d: usize) -> Poly {
        let mut p = self.num.mul_r_pow(rden - self.rden);
        for _ in self.uden..uden {
            p = p.mul_u(d);
        }
        p
    }

    pub fn add(&self, o: &RatFn, d: usize) -> RatFn {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let rden = self.rden.max(o.rden);
        let uden = self.uden.max(o.uden);
        let num = self.lift(rden, uden, d).add(&o.lift(rden, uden, d));
        RatFn::new(num, rden, uden, d)
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.neg(), rden: self.rden, uden: self.uden }
    }

    pub fn sub(&self, o: &RatFn, d: usize) -> RatFn {
        self.add(&o.neg(), d)
    }

    pub fn scale(&self, k: &Scalar) -> RatFn {
        if k.is_zero() {
            return RatFn::zero();
        }
        RatFn { num: self.num.scale(k), rden: self.rden, uden: self.uden }
    }

    pub fn mul(&self, o: &RatFn, d: usize) -> RatFn {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero();
        }
        RatFn::new(self.num.mul(&o.num, d), self.rden + o.rden, self.uden + o.uden, d)
    }

    pub fn mul_poly(&self, p: &Poly, d: usize) -> RatFn {
        RatFn::new(self.num.mul(p, d), self.rden, self.uden, d)
    }

    /// Multiplies by r^k.
    pub fn mul_r(&self, k: i32, d: usize) -> RatFn {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        if k > 0 {
            let k = k as u32;
            let drop = k.min(self.rden);
            let num = self.num.mul_r_pow(k - drop);
            // u ∤ N implies u ∤ rN, so the u-part stays reduced
            RatFn { num, rden: self.rden - drop, uden: self.uden }
        } else {
            RatFn::new(self.num.clone(), self.rden + (-k) as u32, self.uden, d)
        }
    }

    /// Multiplies by u^k.
    pub fn mul_u(&self, k: i32, d: usize) -> RatFn {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        if k > 0 {
            let k = k as u32;
            let drop = k.min(self.uden);
            let mut num = self.num.clone();
            for _ in 0..(k - drop) {
                num = num.mul_u(d);
            }
            RatFn::new(num, self.rden, self.uden - drop, d)
        } else {
            RatFn::new(self.num.clone(), self.rden, self.uden + (-k) as u32, d)
        }
    }

    /// Exact ∂_α, using ∂_α r = x_α/r and ∂_α u = (x_α + δ_{αD} r)/r.
    pub fn deriv(&self, alpha: usize, d: usize) -> RatFn {
        if self.is_zero() {
            return RatFn::zero();
        }
        let n = &self.num;
        let s = self.rden as i64;
        let t = self.uden as i64;
        let xa = x_unit(alpha);
        let one = Scalar::ONE;
        // over r^{S+2} u^{T+1}:
        //   r u (r N_x + x_α N_r) − S x_α u N − T r (x_α + δ r) N
        let inner = n.partial(alpha - 1).mul_r_pow(1).add(&n.partial(R_SLOT).mul_term(xa, &one, d));
        let mut num = inner.mul_r_pow(1).mul_u(d);
        if s != 0 {
            let t2 = n.mul_term(xa, &Scalar::int(-s), d).mul_u(d);
            num = num.add(&t2);
        }
        if t != 0 {
            let mut f = Poly::x(alpha);
            if alpha == d {
                f = f.add(&Poly::r());
            }
            let t3 = n.mul(&f, d).mul_r_pow(1).scale(&Scalar::int(-t));
            num = num.add(&t3);
        }
        RatFn::new(num, self.rden + 2, self.uden + 1, d)
    }

    /// Complex conjugate (the variables are real).
    pub fn conj(&self) -> RatFn {
        RatFn { num: self.num.conj(), rden: self.rden, uden: self.uden }
    }

    /// Value at a point with coordinates x and radius r (both rational).
    pub fn eval(&self, x: &[Rational], r: &Rational) -> Option<Scalar> {
        let d = x.len();
        let u = r + &x[d - 1];
        if self.rden > 0 && r.is_zero() || self.uden > 0 && u.is_zero() {
            return None;
        }
        let mut acc = Scalar::ZERO;
        for (m, c) in self.num.terms() {
            let mut v = r.pow(exp(*m, R_SLOT) as i32);
            for (k, xk) in x.iter().enumerate() {
                let e = exp(*m, k);
                if e > 0 {
                    v *= &xk.pow(e as i32);
                }
            }
            acc += &c.scale(&v);
        }
        let den = &r.pow(self.rden as i32) * &u.pow(self.uden as i32);
        Some(acc.scale(&den.recip()))
    }

    pub fn term_count(&self) -> usize {
        self.num.len()
    }

    pub(crate) fn raw_parts(&self) -> (&Poly, u32, u32) {
        (&self.num, self.rden, self.uden)
    }
}
