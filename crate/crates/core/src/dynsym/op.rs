//! Formal operators as a shared DAG, applied right-to-left to sections.
//!
//! Nodes are reference counted and shared between operators, and the
//! evaluator memoizes per node, so a subexpression such as π_β ψ that occurs
//! in many generators is computed once per input section.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::exact::{Rational, Scalar};
use crate::matrix::Matrix;
use crate::sections::{SectionCtx, SectionExpr};

#[derive(Clone, Debug)]
pub enum Prim {
    /// Multiplication by x_α.
    X(usize),
    /// Multiplication by r^{k/2}.
    RHalf(i32),
    /// Multiplication by u^{k/2}.
    UHalf(i32),
    /// Multiplication by w^k.
    W(u32),
    /// Multiplication by e^{q r}.
    Exp(Rational),
    Derive(usize),
    Gauge(usize),
    Pi(usize),
    Field(usize, usize),
    Spin(Arc<Matrix>),
}

impl Prim {
    pub fn apply(&self, s: &SectionExpr) -> SectionExpr {
        match self {
            Prim::X(a) => s.mul_x(*a),
            Prim::RHalf(k) => s.mul_r_half(*k),
            Prim::UHalf(k) => s.mul_u_half(*k),
            Prim::W(k) => s.mul_w(*k),
            Prim::Exp(q) => s.mul_exp(q),
            Prim::Derive(a) => s.derive(*a),
            Prim::Gauge(b) => s.apply_gauge(*b),
            Prim::Pi(a) => s.pi(*a),
            Prim::Field(a, b) => s.field_strength(*a, *b),
            Prim::Spin(m) => s.mul_spin(m),
        }
    }
}

#[derive(Debug)]
enum Node {
    Identity,
    Apply(Prim, Op),
    Sum(Vec<(Scalar, Op)>),
}

#[derive(Clone, Debug)]
pub struct Op(Arc<Node>);

impl Op {
    pub fn identity() -> Op {
        Op(Arc::new(Node::Identity))
    }

    pub fn zero() -> Op {
        Op(Arc::new(Node::Sum(Vec::new())))
    }

    pub fn prim(p: Prim) -> Op {
        Op::identity().then(p)
    }

    /// Multiplication by the constant k.
    pub fn constant(k: Scalar) -> Op {
        Op::identity().scale(k)
    }

    /// p ∘ self.
    pub fn then(&self, p: Prim) -> Op {
        Op(Arc::new(Node::Apply(p, self.clone())))
    }

    pub fn sum(parts: Vec<(Scalar, Op)>) -> Op {
        Op(Arc::new(Node::Sum(parts.into_iter().filter(|(k, _)| !k.is_zero()).collect())))
    }

    pub fn scale(&self, k: Scalar) -> Op {
        Op::sum(alloc::vec![(k, self.clone())])
    }

    pub fn add(&self, o: &Op) -> Op {
        Op::sum(alloc::vec![(Scalar::ONE, self.clone()), (Scalar::ONE, o.clone())])
    }

    pub fn sub(&self, o: &Op) -> Op {
        Op::sum(alloc::vec![(Scalar::ONE, self.clone()), (-Scalar::ONE, o.clone())])
    }

    pub fn neg(&self) -> Op {
        self.scale(-Scalar::ONE)
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &Op) -> Op {
        Substitution::new(inner).apply(self)
    }

    pub fn commutator(&self, o: &Op) -> Op {
        self.compose(o).sub(&o.compose(self))
    }

    pub fn anticommutator(&self, o: &Op) -> Op {
        self.compose(o).add(&o.compose(self))
    }

    pub fn apply(&self, s: &SectionExpr) -> SectionExpr {
        Evaluator::new(s).eval(self)
    }

    /// Number of distinct nodes.
    pub fn node_count(&self) -> usize {
        fn walk(op: &Op, seen: &mut BTreeMap<usize, ()>) {
            if seen.insert(op.key(), ()).is_some() {
                return;
            }
            match &*op.0 {
                Node::Identity => {}
                Node::Apply(_, c) => walk(c, seen),
                Node::Sum(v) => v.iter().for_each(|(_, c)| walk(c, seen)),
            }
        }
        let mut seen = BTreeMap::new();
        walk(self, &mut seen);
        seen.len()
    }
}

/// Replaces every identity leaf by a fixed operator. One substitution can be
/// applied to several operators; shared nodes stay shared.
pub struct Substitution {
    inner: Op,
    memo: BTreeMap<usize, (Op, Op)>,
}

impl Substitution {
    pub fn new(inner: &Op) -> Substitution {
        Substitution { inner: inner.clone(), memo: BTreeMap::new() }
    }

    pub fn apply(&mut self, op: &Op) -> Op {
        if let Some((_, v)) = self.memo.get(&op.key()) {
            return v.clone();
        }
        let out = match &*op.0 {
            Node::Identity => self.inner.clone(),
            Node::Apply(p, c) => self.apply(c).then(p.clone()),
            Node::Sum(v) => {
                let parts = v.iter().map(|(k, c)| (k.clone(), self.apply(c))).collect();
                Op(Arc::new(Node::Sum(parts)))
            }
        };
        self.memo.insert(op.key(), (op.clone(), out.clone()));
        out
    }
}

/// Conjugation by √r: Ô = r^{−1/2} ∘ O ∘ r^{1/2}.
pub fn hat(op: &Op) -> Op {
    hat_all(core::slice::from_ref(op)).pop().unwrap()
}

/// Hats several operators through one substitution, preserving sharing.
pub fn hat_all(ops: &[Op]) -> Vec<Op> {
    let mut sub = Substitution::new(&Op::prim(Prim::RHalf(1)));
    ops.iter().map(|o| sub.apply(o).then(Prim::RHalf(-1))).collect()
}

/// Memoizing evaluation of operators on one fixed input section.
pub struct Evaluator {
    input: SectionExpr,
    memo: BTreeMap<usize, (Op, SectionExpr)>,
}

impl Evaluator {
    pub fn new(input: &SectionExpr) -> Evaluator {
        Evaluator { input: input.clone(), memo: BTreeMap::new() }
    }

    pub fn ctx(&self) -> &Arc<SectionCtx> {
        self.input.ctx()
    }

    pub fn eval(&mut self, op: &Op) -> SectionExpr {
        if let Some((_, v)) = self.memo.get(&op.key()) {
            return v.clone();
        }
        let out = match &*op.0 {
            Node::Identity => self.input.clone(),
            Node::Apply(p, c) => {
                let v = self.eval(c);
                if v.is_zero() {
                    v
                } else {
                    p.apply(&v)
                }
            }
            Node::Sum(parts) => {
                let vals: Vec<(Scalar, SectionExpr)> = parts.iter().map(|(k, c)| (k.clone(), self.eval(c))).collect();
                let refs: Vec<(Scalar, &SectionExpr)> = vals.iter().map(|(k, v)| (k.clone(), v)).collect();
                SectionExpr::combination(self.input.ctx(), &refs)
            }
        };
        self.memo.insert(op.key(), (op.clone(), out.clone()));
        out
    }
}
