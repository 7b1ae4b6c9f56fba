//! Identity suites run section by section on a battery.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::clifford::CliffordError;
use crate::exact::{Rational, Scalar};
use crate::sections::{eval_points, EvalPoint, SectionCtx, SectionExpr};

use super::battery::Battery;
use super::generators::{dimension_operator, eta, Form, GenIndex, Generators};
use super::op::{Evaluator, Op};
use super::report::{Checker, VerificationReport};

/// Seed for the oracle points, fixed so that reports depend only on the
/// battery seed.
const POINT_SEED: u64 = 0x6d69637a;
pub const ORACLE_POINTS: usize = 12;

/// Generators and oracle points for one (n, μ).
pub struct Lab {
    pub ctx: Arc<SectionCtx>,
    pub expanded: Generators,
    pub definitional: Generators,
    pub hatted: Generators,
    pub points: Vec<EvalPoint>,
}

impl Lab {
    pub fn new(n: usize, mu: &Rational) -> Result<Lab, CliffordError> {
        let ctx = SectionCtx::new(n, mu)?;
        let expanded = Generators::new(&ctx, Form::Expanded);
        let definitional = Generators::new(&ctx, Form::Definitional);
        let hatted = expanded.hatted();
        let points = eval_points(ctx.d, ORACLE_POINTS, POINT_SEED);
        Ok(Lab { ctx, expanded, definitional, hatted, points })
    }

    pub fn checker(&self) -> Checker {
        Checker::new(&self.points)
    }

    pub fn report(&self, check: &str, c: &Checker, b: &Battery) -> VerificationReport {
        c.report(check, self.ctx.n, &self.ctx.mu, b.len(), b.seed)
    }

    fn combo(&self, parts: &[(Scalar, &SectionExpr)]) -> SectionExpr {
        SectionExpr::combination(&self.ctx, parts)
    }

    /// The seven field-strength identities plus F = i[π, π].
    pub fn lemma1_section(&self, idx: usize, psi: &SectionExpr, ck: &mut Checker) {
        let d = self.ctx.d;
        let one = Scalar::ONE;
        let i = Scalar::I;
        let c2 = self.ctx.c2();
        let mut f: BTreeMap<(usize, usize), SectionExpr> = BTreeMap::new();
        for a in 1..=d {
            for b in 1..=d {
                if a != b {
                    f.insert((a, b), psi.field_strength(a, b));
                }
            }
        }
        let fz = SectionExpr::zero(&self.ctx);
        let fp = |a: usize, b: usize| f.get(&(a, b)).unwrap_or(&fz);
        let nab: Vec<SectionExpr> = (1..=d).map(|k| psi.nabla(k)).collect();

        // F_μν F^μν = 2c₂/r⁴
        let mut acc = psi.mul_r_half(-8).scale_rational(&-(&c2 * &Rational::int(2)));
        for ((a, b), v) in &f {
            acc = acc.add(&v.field_strength(*a, *b));
        }
        ck.check("FF", &[], idx, &acc);

        // [∇_κ, F_μν] = (x_μ F_νκ + x_ν F_κμ − 2x_κ F_μν)/r²
        for k in 1..=d {
            for m in 1..=d {
                for n in m + 1..=d {
                    let lhs = fp(m, n).nabla(k).sub(&nab[k - 1].field_strength(m, n));
                    let rhs = self
                        .combo(&[
                            (one.clone(), &fp(n, k).mul_x(m)),
                            (one.clone(), &fp(k, m).mul_x(n)),
                            (Scalar::int(-2), &fp(m, n).mul_x(k)),
                        ])
                        .mul_r_half(-4);
                    ck.check("transport", &[k as i64, m as i64, n as i64], idx, &lhs.sub(&rhs));
                }
            }
        }

        // x_μ A_μ = 0
        let xa = (1..=d).fold(SectionExpr::zero(&self.ctx), |acc, m| acc.add(&psi.apply_gauge(m).mul_x(m)));
        ck.check("xA", &[], idx, &xa);

        for n in 1..=d {
            // x_μ F_μν = 0
            let xf = (1..=d).fold(SectionExpr::zero(&self.ctx), |acc, m| acc.add(&fp(m, n).mul_x(m)));
            ck.check("xF", &[n as i64], idx, &xf);
            // [∇_μ, F_μν] = 0
            let div = (1..=d).fold(SectionExpr::zero(&self.ctx), |acc, m| {
                acc.add(&fp(m, n).nabla(m)).sub(&nab[m - 1].field_strength(m, n))
            });
            ck.check("divF", &[n as i64], idx, &div);
        }

        // the [F, F] identity
        let delta = |a: usize, b: usize| if a == b { one.clone() } else { Scalar::ZERO };
        for m in 1..=d {
            for n in m + 1..=d {
                for a in 1..=d {
                    for b in a + 1..=d {
                        let comm = fp(a, b).field_strength(m, n).sub(&fp(m, n).field_strength(a, b)).mul_r_half(4);
                        let lhs = self.combo(&[
                            (one.clone(), &comm),
                            (&i * &delta(a, n), fp(m, b)),
                            (-&i * &delta(a, m), fp(n, b)),
                            (&i * &delta(b, n), fp(a, m)),
                            (-&i * &delta(b, m), fp(a, n)),
                        ]);
                        let rhs = self
                            .combo(&[
                                (i.clone(), &fp(b, n).mul_x(a).mul_x(m)),
                                (i.clone(), &fp(n, a).mul_x(b).mul_x(m)),
                                (-&i, &fp(b, m).mul_x(a).mul_x(n)),
                                (-&i, &fp(m, a).mul_x(b).mul_x(n)),
                            ])
                            .mul_r_half(-4);
                        ck.check("FF-commutator", &[m as i64, n as i64, a as i64, b as i64], idx, &lhs.sub(&rhs));
                    }
                }
            }
        }

        // r² F_λα F_λβ = (c₂/n)(δ_αβ/r² − x_α x_β/r⁴) + i(n−1)F_αβ
        let c = &self.ctx.c;
        let nn = self.ctx.n as i64;
        for a in 1..=d {
            for b in a..=d {
                let mut lhs = SectionExpr::zero(&self.ctx);
                for l in 1..=d {
                    if l != a && l != b {
                        lhs = lhs.add(&fp(l, b).field_strength(l, a));
                    }
                }
                let lhs = lhs.mul_r_half(4);
                let mut rhs = psi.mul_x(a).mul_x(b).mul_r_half(-8).scale_rational(&-c.clone());
                if a == b {
                    rhs = rhs.add(&psi.mul_r_half(-4).scale_rational(c));
                } else {
                    rhs = rhs.add(&fp(a, b).scale(&(&i * &Scalar::int(nn - 1))));
                }
                ck.check("FF-contraction", &[a as i64, b as i64], idx, &lhs.sub(&rhs));
            }
        }

        // F_αβ = i[π_α, π_β]
        let pis: Vec<SectionExpr> = (1..=d).map(|a| psi.pi(a)).collect();
        for a in 1..=d {
            for b in a + 1..=d {
                let comm = pis[b - 1].pi(a).sub(&pis[a - 1].pi(b)).scale(&i);
                ck.check("curvature", &[a as i64, b as i64], idx, &comm.sub(fp(a, b)));
            }
        }
    }

    /// so(D) vector identities and the dimension operator identities.
    pub fn lemma2_section(&self, idx: usize, psi: &SectionExpr, ck: &mut Checker) {
        let d = self.ctx.d;
        let i = Scalar::I;
        let js: Vec<(usize, usize, Op)> = (1..=d)
            .flat_map(|a| (a + 1..=d).map(move |b| (a, b)))
            .map(|(a, b)| (a, b, self.expanded.get(a as GenIndex, b as GenIndex)))
            .collect();
        let mut base = Evaluator::new(psi);
        let jpsi: Vec<SectionExpr> = js.iter().map(|(_, _, op)| base.eval(op)).collect();
        let j_on = |input: &SectionExpr| {
            let mut ev = Evaluator::new(input);
            js.iter().map(|(_, _, op)| ev.eval(op)).collect::<Vec<_>>()
        };
        // [J, g] ψ = J(gψ) − g(Jψ) for a multiplication-like g
        let bracket = |g: &dyn Fn(&SectionExpr) -> SectionExpr| {
            let outer = j_on(&g(psi));
            outer.iter().zip(&jpsi).map(|(o, jp)| o.sub(&g(jp))).collect::<Vec<_>>()
        };

        for (k, res) in bracket(&|s| s.mul_r_half(2)).iter().enumerate() {
            ck.check("[J,r]", &[js[k].0 as i64, js[k].1 as i64], idx, res);
        }
        for (k, res) in bracket(&|s| s.mul_r_half(-2)).iter().enumerate() {
            ck.check("[J,1/r]", &[js[k].0 as i64, js[k].1 as i64], idx, res);
        }
        let delta = |a: usize, b: usize| if a == b { Scalar::ONE } else { Scalar::ZERO };
        for nu in 1..=d {
            let xs = bracket(&|s| s.mul_x(nu));
            let ps = bracket(&|s| s.pi(nu));
            for (k, (a, b, _)) in js.iter().enumerate() {
                let (a, b) = (*a, *b);
                let rhs = self.combo(&[(&-&i * &delta(b, nu), &psi.mul_x(a)), (&i * &delta(a, nu), &psi.mul_x(b))]);
                ck.check("[J,x]", &[a as i64, b as i64, nu as i64], idx, &xs[k].sub(&rhs));
                let rhs = self.combo(&[(&-&i * &delta(b, nu), &psi.pi(a)), (&i * &delta(a, nu), &psi.pi(b))]);
                ck.check("[J,pi]", &[a as i64, b as i64, nu as i64], idx, &ps[k].sub(&rhs));
            }
        }
        for a2 in 1..=d {
            for b2 in a2 + 1..=d {
                let fs = bracket(&|s| s.field_strength(a2, b2));
                for (k, (a, b, _)) in js.iter().enumerate() {
                    let (a, b) = (*a, *b);
                    let rhs = self.combo(&[
                        (&i * &delta(a, a2), &psi.field_strength(b, b2)),
                        (&i * &delta(b, b2), &psi.field_strength(a, a2)),
                        (-&i * &delta(a, b2), &psi.field_strength(b, a2)),
                        (-&i * &delta(b, a2), &psi.field_strength(a, b2)),
                    ]);
                    ck.check("[J,F]", &[a as i64, b as i64, a2 as i64, b2 as i64], idx, &fs[k].sub(&rhs));
                }
            }
        }

        // −r⃗·∇ is the dimension operator
        let dil = dimension_operator(&self.ctx);
        let dpsi = dil.apply(psi);
        let dbr = |g: &dyn Fn(&SectionExpr) -> SectionExpr| dil.apply(&g(psi)).sub(&g(&dpsi));
        ck.check("[D,r]", &[], idx, &dbr(&|s| s.mul_r_half(2)).add(&psi.mul_r_half(2)));
        ck.check("[D,1/r]", &[], idx, &dbr(&|s| s.mul_r_half(-2)).sub(&psi.mul_r_half(-2)));
        for nu in 1..=d {
            ck.check("[D,x]", &[nu as i64], idx, &dbr(&|s| s.mul_x(nu)).add(&psi.mul_x(nu)));
            ck.check("[D,pi]", &[nu as i64], idx, &dbr(&|s| s.pi(nu)).sub(&psi.pi(nu)));
        }
    }

    /// Definitional and expanded generators agree; J_AB = −J_BA.
    pub fn forms_section(&self, idx: usize, psi: &SectionExpr, ck: &mut Checker) {
        let mut ev_e = Evaluator::new(psi);
        let mut ev_d = Evaluator::new(psi);
        for (a, b) in self.expanded.pairs() {
            let e = ev_e.eval(&self.expanded.get(a, b));
            let df = ev_d.eval(&self.definitional.get(a, b));
            ck.check("definitional=expanded", &[a as i64, b as i64], idx, &e.sub(&df));
            let anti = ev_e.eval(&self.expanded.get(b, a));
            ck.check("antisymmetry", &[a as i64, b as i64], idx, &e.add(&anti));
        }
    }

    /// Commutation relations and quadratic identities for one generator
    /// family on one section; the second-order table is shared between them.
    pub fn theorem_section(&self, gens: &Generators, idx: usize, psi: &SectionExpr, comm: &mut Checker, quad: &mut Checker) {
        let table = SecondOrder::new(gens, psi);
        table.commutators(idx, comm);
        table.quadratic(self.ctx.a(), idx, quad);
    }
}

/// J_P ψ and J_P J_Q ψ for all stored pairs P, Q.
pub struct SecondOrder<'a> {
    gens: &'a Generators,
    psi: SectionExpr,
    pairs: Vec<(GenIndex, GenIndex)>,
    slot: BTreeMap<(GenIndex, GenIndex), usize>,
    first: Vec<SectionExpr>,
    /// second[q][p] = J_p J_q ψ
    second: Vec<Vec<SectionExpr>>,
}

impl<'a> SecondOrder<'a> {
    pub fn new(gens: &'a Generators, psi: &SectionExpr) -> SecondOrder<'a> {
        let pairs = gens.pairs();
        let slot = pairs.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        let ops: Vec<Op> = pairs.iter().map(|(a, b)| gens.get(*a, *b)).collect();
        let mut ev = Evaluator::new(psi);
        let first: Vec<SectionExpr> = ops.iter().map(|o| ev.eval(o)).collect();
        let second = first
            .iter()
            .map(|s| {
                let mut ev = Evaluator::new(s);
                ops.iter().map(|o| ev.eval(o)).collect()
            })
            .collect();
        SecondOrder { gens, psi: psi.clone(), pairs, slot, first, second }
    }

    fn ctx(&self) -> &Arc<SectionCtx> {
        self.psi.ctx()
    }

    /// (sign, slot) of J_AB, None for A = B.
    fn at(&self, a: GenIndex, b: GenIndex) -> Option<(i32, usize)> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Some((1, self.slot[&(a, b)])),
            core::cmp::Ordering::Greater => Some((-1, self.slot[&(b, a)])),
            core::cmp::Ordering::Equal => None,
        }
    }

    /// J_AB ψ.
    pub fn j(&self, a: GenIndex, b: GenIndex) -> SectionExpr {
        match self.at(a, b) {
            Some((1, k)) => self.first[k].clone(),
            Some((_, k)) => self.first[k].neg(),
            None => SectionExpr::zero(self.ctx()),
        }
    }

    /// J_P J_Q ψ.
    pub fn jj(&self, p: (GenIndex, GenIndex), q: (GenIndex, GenIndex)) -> SectionExpr {
        match (self.at(p.0, p.1), self.at(q.0, q.1)) {
            (Some((sp, kp)), Some((sq, kq))) => {
                let v = &self.second[kq][kp];
                if sp * sq == 1 {
                    v.clone()
                } else {
                    v.neg()
                }
            }
            _ => SectionExpr::zero(self.ctx()),
        }
    }

    pub fn anti(&self, p: (GenIndex, GenIndex), q: (GenIndex, GenIndex)) -> SectionExpr {
        self.jj(p, q).add(&self.jj(q, p))
    }

    pub fn commutators(&self, idx: usize, ck: &mut Checker) {
        let i = Scalar::I;
        for (x, &(a, b)) in self.pairs.iter().enumerate() {
            for &(a2, b2) in &self.pairs[x + 1..] {
                let lhs = self.jj((a, b), (a2, b2)).sub(&self.jj((a2, b2), (a, b)));
                let e = |p, q| Scalar::int(eta(p, q) as i64);
                let terms = [
                    (-&i * &e(a, a2), self.j(b, b2)),
                    (-&i * &e(b, b2), self.j(a, a2)),
                    (&i * &e(a, b2), self.j(b, a2)),
                    (&i * &e(b, a2), self.j(a, b2)),
                ];
                let refs: Vec<(Scalar, &SectionExpr)> = terms.iter().map(|(k, s)| (k.clone(), s)).collect();
                let rhs = SectionExpr::combination(self.ctx(), &refs);
                ck.check("commutator", &[a as i64, b as i64, a2 as i64, b2 as i64], idx, &lhs.sub(&rhs));
            }
        }
        let _ = self.gens;
    }

    /// The ten identities of part 2, then the covariant form
    /// Σ_A η_AA {J_AB, J_AC} = −2a η_BC for all B ≤ C.
    pub fn quadratic(&self, a: Rational, idx: usize, ck: &mut Checker) {
        let d = self.gens.d as GenIndex;
        let (t, gp, gm) = ((d + 1, -1), (d + 1, 0), (-1, 0));
        let av = |x: GenIndex| (x, d + 1);
        let mv = |x: GenIndex| (x, -1);
        let gv = |x: GenIndex| (x, 0);
        let sp: Vec<GenIndex> = (1..=d).collect();
        let ctx = self.ctx().clone();
        let sum = |f: &dyn Fn(GenIndex) -> SectionExpr| sp.iter().fold(SectionExpr::zero(&ctx), |acc, x| acc.add(&f(*x)));
        let sq = |p| self.jj(p, p);
        let apsi = self.psi.scale_rational(&a);
        let id = |k: i64| format!("quadratic-{k}");

        for &b in &sp {
            for &c in sp.iter().filter(|c| **c >= b) {
                let lhs = sum(&|x| self.anti((x, b), (x, c))).add(&self.anti(av(b), av(c))).sub(&self.anti(mv(b), mv(c))).sub(&self.anti(gv(b), gv(c)));
                // 2aη_βγ = −2aδ_βγ
                let res = if b == c { lhs.add(&apsi.scale(&Scalar::int(2))) } else { lhs };
                ck.check(&id(1), &[b as i64, c as i64], idx, &res);
            }
        }
        for &b in &sp {
            let r2 = sum(&|x| self.anti((x, b), av(x))).sub(&self.anti(mv(b), t)).sub(&self.anti(gv(b), gp));
            ck.check(&id(2), &[b as i64], idx, &r2);
            let r4 = sum(&|x| self.anti((x, b), mv(x))).sub(&self.anti(av(b), t)).sub(&self.anti(gv(b), gm));
            ck.check(&id(4), &[b as i64], idx, &r4);
            let r7 = sum(&|x| self.anti((x, b), gv(x))).sub(&self.anti(av(b), gp)).add(&self.anti(mv(b), gm));
            ck.check(&id(7), &[b as i64], idx, &r7);
        }
        let r3 = sum(&|x| sq(av(x))).sub(&sq(t)).sub(&sq(gp)).add(&apsi);
        ck.check(&id(3), &[], idx, &r3);
        let r5 = sum(&|x| self.anti(av(x), mv(x))).sub(&self.anti(gp, gm));
        ck.check(&id(5), &[], idx, &r5);
        let r6 = sum(&|x| sq(mv(x))).add(&sq(t)).sub(&sq(gm)).sub(&apsi);
        ck.check(&id(6), &[], idx, &r6);
        let r8 = sum(&|x| self.anti(av(x), gv(x))).add(&self.anti(t, gm));
        ck.check(&id(8), &[], idx, &r8);
        let r9 = sum(&|x| self.anti(mv(x), gv(x))).add(&self.anti(gp, t));
        ck.check(&id(9), &[], idx, &r9);
        let r10 = sum(&|x| sq(gv(x))).add(&sq(gp)).sub(&sq(gm)).sub(&apsi);
        ck.check(&id(10), &[], idx, &r10);

        let all: Vec<GenIndex> = (-1..=d + 1).collect();
        for &b in &all {
            for &c in all.iter().filter(|c| **c >= b) {
                let mut acc = SectionExpr::zero(&ctx);
                for &x in &all {
                    let term = self.anti((x, b), (x, c));
                    acc = if eta(x, x) > 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                if b == c {
                    acc = acc.add(&apsi.scale(&Scalar::int(2 * eta(b, b) as i64)));
                }
                ck.check("quadratic-covariant", &[b as i64, c as i64], idx, &acc);
            }
        }
    }
}

fn run(lab: &Lab, b: &Battery, f: impl Fn(usize, &SectionExpr, &mut Checker)) -> Checker {
    let mut ck = lab.checker();
    for (k, s) in b.sections.iter().enumerate() {
        f(k, s, &mut ck);
    }
    ck
}

pub fn verify_lemma1(lab: &Lab, b: &Battery) -> VerificationReport {
    lab.report("lemma1", &run(lab, b, |k, s, c| lab.lemma1_section(k, s, c)), b)
}

pub fn verify_lemma2(lab: &Lab, b: &Battery) -> VerificationReport {
    lab.report("lemma2", &run(lab, b, |k, s, c| lab.lemma2_section(k, s, c)), b)
}

pub fn verify_forms(lab: &Lab, b: &Battery) -> VerificationReport {
    lab.report("generator-forms", &run(lab, b, |k, s, c| lab.forms_section(k, s, c)), b)
}

/// Commutation relations and quadratic identities for plain and hatted
/// generators: reports "commutators", "quadratic", "commutators-hatted",
/// "quadratic-hatted".
pub fn verify_theorem(lab: &Lab, b: &Battery) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for (gens, suffix) in [(&lab.expanded, ""), (&lab.hatted, "-hatted")] {
        let mut cm = lab.checker();
        let mut qd = lab.checker();
        for (k, s) in b.sections.iter().enumerate() {
            lab.theorem_section(gens, k, s, &mut cm, &mut qd);
        }
        out.push(lab.report(&format!("commutators{suffix}"), &cm, b));
        out.push(lab.report(&format!("quadratic{suffix}"), &qd, b));
    }
    out
}
