//! Seeded test sections c·x^m r^s u^{−t} e^{q r} ⊗ e_j.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

use crate::exact::{Rational, Scalar};
use crate::sections::{SectionCtx, SectionExpr};

#[derive(Clone, Debug)]
pub struct Battery {
    pub seed: u64,
    pub sections: Vec<SectionExpr>,
    pub labels: Vec<String>,
}

impl Battery {
    pub fn len(&self) -> usize {
        self.sections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.is_empty()
    }
}

const R_EXPS: [(i64, i64); 5] = [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)];

/// `size` sections. Every (s, t, q) shape is used before any repeats, in a
/// seed-dependent order; spinor basis vectors are cycled.
pub fn battery(ctx: &Arc<SectionCtx>, size: usize, seed: u64) -> Battery {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = ctx.d;
    let mut shapes: Vec<(usize, u32, i64)> = Vec::new();
    for s in 0..R_EXPS.len() {
        for t in 0..3 {
            for q in [0, -1] {
                shapes.push((s, t, q));
            }
        }
    }
    // Fisher-Yates
    for i in (1..shapes.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        shapes.swap(i, j);
    }
    let mut sections = Vec::with_capacity(size);
    let mut labels = Vec::with_capacity(size);
    for k in 0..size {
        let (si, t, q) = shapes[k % shapes.len()];
        let total = (rng.next_u64() % 3) as u32;
        let mut xexp = alloc::vec![0u32; d];
        for _ in 0..total {
            xexp[(rng.next_u64() % d as u64) as usize] += 1;
        }
        let small = |rng: &mut ChaCha8Rng| (rng.next_u64() % 9) as i64 - 4;
        let mut re = small(&mut rng);
        let im = small(&mut rng);
        if re == 0 && im == 0 {
            re = 1;
        }
        let den = (rng.next_u64() % 3) as i64 + 1;
        let coeff = Scalar::new(Rational::new(re, den), Rational::new(im, den));
        let rexp = Rational::new(R_EXPS[si].0, R_EXPS[si].1);
        let uexp = Rational::int(-(t as i64));
        let rate = Rational::int(q);
        let spin_index = k % ctx.dim();
        let spin = SectionExpr::basis_spin(ctx, spin_index);
        sections.push(SectionExpr::monomial(ctx, coeff.clone(), &xexp, &rexp, &uexp, 0, &rate, &spin));
        labels.push(format!("({coeff}) x^{xexp:?} r^({rexp}) u^({uexp}) exp({rate} r) e{spin_index}"));
    }
    Battery { seed, sections, labels }
}
