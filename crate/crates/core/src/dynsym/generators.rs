//! The generators J_AB, A, B ∈ {−1, 0, 1, …, D+1}, in expanded and in
//! definitional (nested commutator) form.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::exact::{Rational, Scalar};
use crate::sections::SectionCtx;

use super::op::{hat_all, Op, Prim};

/// A generator index, ordered −1 < 0 < 1 < … < D+1.
pub type GenIndex = i32;

/// η = diag(+, +, −, …, −) in the order −1, 0, 1, …, D+1.
pub fn eta(a: GenIndex, b: GenIndex) -> i32 {
    if a != b {
        0
    } else if a <= 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Expanded,
    Definitional,
}

#[derive(Clone, Debug)]
pub struct Generators {
    pub d: usize,
    pub hatted: bool,
    /// J_AB for A < B.
    ops: BTreeMap<(GenIndex, GenIndex), Op>,
}

fn r_pow(k: i32) -> Op {
    Op::prim(Prim::RHalf(2 * k))
}

fn re(x: Rational) -> Scalar {
    Scalar::real(x)
}

/// Scalar operators shared by both forms.
struct Pieces {
    pi: Vec<Op>,
    pi2: Op,
    rdotpi: Op,
}

fn pieces(d: usize) -> Pieces {
    let pi: Vec<Op> = (1..=d).map(|b| Op::prim(Prim::Pi(b))).collect();
    let pi2 = Op::sum((1..=d).map(|b| (Scalar::ONE, pi[b - 1].then(Prim::Pi(b)))).collect());
    let rdotpi = Op::sum((1..=d).map(|b| (Scalar::ONE, pi[b - 1].then(Prim::X(b)))).collect());
    Pieces { pi, pi2, rdotpi }
}

impl Generators {
    pub fn new(ctx: &Arc<SectionCtx>, form: Form) -> Generators {
        let d = ctx.d;
        let c = ctx.c.clone();
        let p = pieces(d);
        let half = Scalar::frac(1, 2);
        let i = Scalar::I;
        let dp1 = (d + 1) as GenIndex;

        let gamma: Vec<Op> = (1..=d).map(|a| p.pi[a - 1].then(Prim::RHalf(2))).collect();
        let x_op = p.pi2.then(Prim::RHalf(2)).add(&r_pow(-1).scale(re(c.clone())));
        let y_op = r_pow(1);

        let mut j_ab: BTreeMap<(usize, usize), Op> = BTreeMap::new();
        let mut a_vec = Vec::new();
        let mut m_vec = Vec::new();
        let (t, g_plus, g_minus);
        match form {
            Form::Expanded => {
                for a in 1..=d {
                    for b in a + 1..=d {
                        let f = Op::prim(Prim::Field(a, b)).then(Prim::RHalf(4));
                        let op = Op::sum(alloc::vec![
                            (Scalar::ONE, p.pi[b - 1].then(Prim::X(a))),
                            (-Scalar::ONE, p.pi[a - 1].then(Prim::X(b))),
                            (Scalar::ONE, f),
                        ]);
                        j_ab.insert((a, b), op);
                    }
                }
                // everything in A_α and M_α except the ∓½x_α term
                let common: Vec<Op> = (1..=d)
                    .map(|a| {
                        let fpi = Op::sum(
                            (1..=d)
                                .filter(|b| *b != a)
                                .map(|b| (Scalar::ONE, p.pi[b - 1].then(Prim::Field(a, b)).then(Prim::RHalf(4))))
                                .collect(),
                        );
                        Op::sum(alloc::vec![
                            (half.clone(), p.pi2.then(Prim::X(a))),
                            (-Scalar::ONE, p.rdotpi.then(Prim::Pi(a))),
                            (Scalar::ONE, fpi),
                            (re(-(&c / &Rational::int(2))), Op::prim(Prim::X(a)).then(Prim::RHalf(-4))),
                            (&i * &Scalar::frac(d as i64 - 3, 2), p.pi[a - 1].clone()),
                        ])
                    })
                    .collect();
                for a in 1..=d {
                    let xa = Op::prim(Prim::X(a));
                    a_vec.push(common[a - 1].add(&xa.scale(-half.clone())));
                    m_vec.push(common[a - 1].add(&xa.scale(half.clone())));
                }
                t = p.rdotpi.add(&Op::constant(&-i.clone() * &Scalar::frac(d as i64 - 1, 2)));
                let rpi2 = p.pi2.then(Prim::RHalf(2));
                let c_over_r = r_pow(-1).scale(re(c.clone()));
                g_minus = Op::sum(alloc::vec![
                    (half.clone(), rpi2.clone()),
                    (half.clone(), r_pow(1)),
                    (half.clone(), c_over_r.clone()),
                ]);
                g_plus = Op::sum(alloc::vec![
                    (half.clone(), rpi2),
                    (-half.clone(), r_pow(1)),
                    (half.clone(), c_over_r),
                ]);
            }
            Form::Definitional => {
                for a in 1..=d {
                    for b in a + 1..=d {
                        j_ab.insert((a, b), gamma[a - 1].commutator(&gamma[b - 1]).scale(i.clone()));
                    }
                }
                for a in 1..=d {
                    let z = gamma[a - 1].commutator(&x_op).scale(i.clone());
                    let w = gamma[a - 1].commutator(&y_op).scale(i.clone());
                    a_vec.push(Op::sum(alloc::vec![(half.clone(), z.clone()), (-half.clone(), w.clone())]));
                    m_vec.push(Op::sum(alloc::vec![(half.clone(), z), (half.clone(), w)]));
                }
                g_plus = Op::sum(alloc::vec![(half.clone(), x_op.clone()), (-half.clone(), y_op.clone())]);
                g_minus = Op::sum(alloc::vec![(half.clone(), x_op.clone()), (half.clone(), y_op.clone())]);
                t = g_plus.commutator(&g_minus).scale(i.clone());
            }
        }

        let mut ops = BTreeMap::new();
        // stored with A < B; J_BA = −J_AB
        ops.insert((-1, 0), g_minus);
        ops.insert((-1, dp1), t.neg());
        ops.insert((0, dp1), g_plus.neg());
        for a in 1..=d {
            let ai = a as GenIndex;
            ops.insert((-1, ai), m_vec[a - 1].neg());
            ops.insert((0, ai), gamma[a - 1].neg());
            ops.insert((ai, dp1), a_vec[a - 1].clone());
            for b in a + 1..=d {
                ops.insert((ai, b as GenIndex), j_ab[&(a, b)].clone());
            }
        }
        Generators { d, hatted: false, ops }
    }

    /// Index range −1..=D+1.
    pub fn indices(&self) -> Vec<GenIndex> {
        (-1..=(self.d as GenIndex + 1)).collect()
    }

    /// All pairs (A, B) with A < B, in lexicographic order.
    pub fn pairs(&self) -> Vec<(GenIndex, GenIndex)> {
        self.ops.keys().copied().collect()
    }

    /// The stored operator for A < B together with the sign making it J_AB;
    /// None when A = B.
    pub fn signed(&self, a: GenIndex, b: GenIndex) -> Option<(i32, &Op)> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Some((1, &self.ops[&(a, b)])),
            core::cmp::Ordering::Greater => Some((-1, &self.ops[&(b, a)])),
            core::cmp::Ordering::Equal => None,
        }
    }

    /// J_AB as an operator (zero for A = B).
    pub fn get(&self, a: GenIndex, b: GenIndex) -> Op {
        match self.signed(a, b) {
            Some((1, op)) => op.clone(),
            Some((_, op)) => op.neg(),
            None => Op::zero(),
        }
    }

    /// The conjugated family Ĵ_AB = r^{−1/2} J_AB r^{1/2}.
    pub fn hatted(&self) -> Generators {
        let keys = self.pairs();
        let ops: Vec<Op> = keys.iter().map(|k| self.ops[k].clone()).collect();
        let hatted = hat_all(&ops);
        Generators { d: self.d, hatted: true, ops: keys.into_iter().zip(hatted).collect() }
    }

    pub fn name(&self, a: GenIndex, b: GenIndex) -> alloc::string::String {
        alloc::format!("J{}[{},{}]", if self.hatted { "^" } else { "" }, a, b)
    }
}

/// H = ½π² + c/(2r²) − 1/r.
pub fn hamiltonian(ctx: &Arc<SectionCtx>) -> Op {
    let p = pieces(ctx.d);
    Op::sum(alloc::vec![
        (Scalar::frac(1, 2), p.pi2),
        (Scalar::real(&ctx.c / &Rational::int(2)), r_pow(-2)),
        (-Scalar::ONE, r_pow(-1)),
    ])
}

/// The dimension operator −r⃗·∇.
pub fn dimension_operator(ctx: &Arc<SectionCtx>) -> Op {
    // ∇_β = iπ_β
    let p = pieces(ctx.d);
    p.rdotpi.scale(-Scalar::I)
}
