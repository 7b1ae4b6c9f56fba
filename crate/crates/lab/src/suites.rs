use std::time::Instant;

use micz_core::clifford::{build_rep, casimir_formula, casimir_scalar};
use micz_core::dynsym::{battery, Battery, Checker, Lab, VerificationReport};
use micz_core::exact::{Rational, Scalar};
use micz_core::ladder::{ad_expectation, hermiticity_defects, highest_section, lower, module_weight_check, tower, HighestSection, Method};
use micz_core::reptheory::{
    branch_b_to_d, branch_d_to_b, degeneracy_table, fiber_weight, level_weight, orbital_weight, weyl_dim, Weight,
};
use micz_core::spectrum::{energy, level_shift, radial_ode_residual, twisted_radial_gram};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{RunConfig, Suite};
use crate::record::{rational, sort_records, Record};

fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn opt_scalar(s: &Option<Scalar>) -> Value {
    s.as_ref().map_or(Value::Null, scalar)
}

fn weight(w: &Weight) -> Value {
    Value::String(w.to_string())
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Lemma1,
    Lemma2,
    Forms,
    Theorem,
    Casimir,
    Spectrum,
    Radial,
    Degeneracy,
    Branch,
    Level(u32),
}

impl Task {
    fn needs_lab(self) -> bool {
        matches!(self, Task::Lemma1 | Task::Lemma2 | Task::Forms | Task::Theorem | Task::Level(_))
    }
}

fn tasks(cfg: &RunConfig) -> Vec<Task> {
    let mut out = Vec::new();
    let w = |s| cfg.wants(s);
    if w(Suite::Lemma1) {
        out.push(Task::Lemma1);
    }
    if w(Suite::Lemma2) {
        out.push(Task::Lemma2);
    }
    if w(Suite::Forms) {
        out.push(Task::Forms);
    }
    if w(Suite::Commutators) || w(Suite::Quadratic) {
        out.push(Task::Theorem);
    }
    if w(Suite::Casimir) {
        out.push(Task::Casimir);
    }
    if w(Suite::Spectrum) {
        out.push(Task::Spectrum);
    }
    if w(Suite::Radial) {
        out.push(Task::Radial);
    }
    if w(Suite::Degeneracy) {
        out.push(Task::Degeneracy);
    }
    if w(Suite::Branch) {
        out.push(Task::Branch);
    }
    if w(Suite::Ladder) || w(Suite::Hamiltonian) || w(Suite::Expectation) {
        out.extend((0..=cfg.imax).map(Task::Level));
    } else if w(Suite::ModuleWeight) {
        out.push(Task::Level(0));
    }
    out
}

/// Runs every selected suite on every configured point, in parallel on the
/// current rayon pool, and returns the records in report order.
pub fn run(cfg: &RunConfig) -> Vec<Record> {
    let ts = tasks(cfg);
    let labs: Vec<Option<Lab>> = cfg
        .points
        .par_iter()
        .map(|(n, mu)| ts.iter().any(|t| t.needs_lab()).then(|| Lab::new(*n, mu).expect("validated point")))
        .collect();
    let jobs: Vec<(usize, Task)> = (0..cfg.points.len()).flat_map(|p| ts.iter().map(move |t| (p, *t))).collect();
    let mut records: Vec<Record> = jobs
        .par_iter()
        .flat_map_iter(|(p, t)| {
            let (n, mu) = &cfg.points[*p];
            let start = Instant::now();
            let mut recs = run_task(*t, *n, mu, labs[*p].as_ref(), cfg);
            if cfg.timings {
                let ms = start.elapsed().as_millis() as u64;
                for r in &mut recs {
                    r.elapsed_ms = Some(ms);
                }
            }
            recs
        })
        .collect();
    records.retain(|r| selected(cfg, &r.check));
    sort_records(&mut records);
    records
}

fn selected(cfg: &RunConfig, check: &str) -> bool {
    let suite = match check {
        "lemma1" => Suite::Lemma1,
        "lemma2" => Suite::Lemma2,
        "generator-forms" => Suite::Forms,
        "commutators" | "commutators-hatted" => Suite::Commutators,
        "quadratic" | "quadratic-hatted" => Suite::Quadratic,
        "casimir" => Suite::Casimir,
        "hamiltonian" => Suite::Hamiltonian,
        "spectrum" => Suite::Spectrum,
        "radial-ode" | "radial-gram" => Suite::Radial,
        "degeneracy" => Suite::Degeneracy,
        "branch" => Suite::Branch,
        "ladder" | "hermiticity" => Suite::Ladder,
        "expectation" => Suite::Expectation,
        "module-weight" => Suite::ModuleWeight,
        _ => return true,
    };
    cfg.wants(suite)
}

fn run_task(t: Task, n: usize, mu: &Rational, lab: Option<&Lab>, cfg: &RunConfig) -> Vec<Record> {
    match t {
        Task::Lemma1 => vec![identity_suite(lab.unwrap(), cfg, "lemma1", |l, k, s, c| l.lemma1_section(k, s, c))],
        Task::Lemma2 => vec![identity_suite(lab.unwrap(), cfg, "lemma2", |l, k, s, c| l.lemma2_section(k, s, c))],
        Task::Forms => vec![identity_suite(lab.unwrap(), cfg, "generator-forms", |l, k, s, c| l.forms_section(k, s, c))],
        Task::Theorem => theorem(lab.unwrap(), cfg),
        Task::Casimir => vec![casimir(n, mu, cfg)],
        Task::Spectrum => spectrum(n, mu, cfg),
        Task::Radial => radial(n, mu, cfg),
        Task::Degeneracy => vec![degeneracy(n, mu, cfg)],
        Task::Branch => branch(n, mu, cfg),
        Task::Level(level) => level_records(lab.unwrap(), level, cfg),
    }
}

fn identity_record(rep: &VerificationReport, lab: &Lab) -> Record {
    let mut r = Record::new(&rep.check, lab.ctx.n, &lab.ctx.mu, rep.seed).param("battery_size", rep.battery_size).status(rep.status);
    r.residual_terms = rep.residual_terms;
    r = r.detail("instances", rep.instances).detail("eval_only", rep.eval_only);
    if let Some(f) = &rep.failure {
        r = r.detail("failure", json!({ "identity": f.identity, "indices": f.indices, "section": f.section, "residual": f.residual }));
    }
    r
}

/// Per-section checkers, merged in battery order.
fn checked<F>(lab: &Lab, b: &Battery, f: F) -> Checker
where
    F: Fn(usize, &micz_core::sections::SectionExpr, &mut Checker) + Sync,
{
    let parts: Vec<Checker> = b
        .sections
        .par_iter()
        .enumerate()
        .map(|(k, s)| {
            let mut c = lab.checker();
            f(k, s, &mut c);
            c
        })
        .collect();
    let mut all = lab.checker();
    for c in parts {
        all.merge(c);
    }
    all
}

fn identity_suite<F>(lab: &Lab, cfg: &RunConfig, check: &str, f: F) -> Record
where
    F: Fn(&Lab, usize, &micz_core::sections::SectionExpr, &mut Checker) + Sync,
{
    let b = battery(&lab.ctx, cfg.battery_size, cfg.seed);
    let ck = checked(lab, &b, |k, s, c| f(lab, k, s, c));
    identity_record(&lab.report(check, &ck, &b), lab)
}

fn theorem(lab: &Lab, cfg: &RunConfig) -> Vec<Record> {
    let b = battery(&lab.ctx, cfg.battery_size, cfg.seed);
    let a = lab.ctx.a();
    let mut out = Vec::new();
    for (gens, suffix) in [(&lab.expanded, ""), (&lab.hatted, "-hatted")] {
        let parts: Vec<(Checker, Checker)> = b
            .sections
            .par_iter()
            .enumerate()
            .map(|(k, s)| {
                let (mut cm, mut qd) = (lab.checker(), lab.checker());
                lab.theorem_section(gens, k, s, &mut cm, &mut qd);
                (cm, qd)
            })
            .collect();
        let (mut cm, mut qd) = (lab.checker(), lab.checker());
        for (c, q) in parts {
            cm.merge(c);
            qd.merge(q);
        }
        out.push(identity_record(&lab.report(&format!("commutators{suffix}"), &cm, &b), lab));
        out.push(identity_record(&lab.report(&format!("quadratic{suffix}"), &qd, &b), lab).detail("a", rational(&a)));
    }
    out
}

fn casimir(n: usize, mu: &Rational, cfg: &RunConfig) -> Record {
    let r = Record::new("casimir", n, mu, cfg.seed);
    let rep = match build_rep(n, mu) {
        Ok(rep) => rep,
        Err(e) => return r.ok(false).detail("error", e.to_string()),
    };
    let formula = casimir_formula(n, mu);
    let weyl = weyl_dim(&fiber_weight(n, mu)).ok();
    let value = casimir_scalar(&rep);
    let ok = value.as_ref() == Ok(&formula) && weyl == Some(rep.dim as u64);
    r.ok(ok)
        .detail("casimir", value.map_or(Value::Null, |v| rational(&v)))
        .detail("formula", rational(&formula))
        .detail("dim", rep.dim)
        .detail("weyl_dim", weyl)
}

fn spectrum(n: usize, mu: &Rational, cfg: &RunConfig) -> Vec<Record> {
    let table = degeneracy_table(n, mu, cfg.imax);
    (0..=cfg.imax)
        .map(|level| {
            let e = energy(level, n, mu);
            let s = level_shift(level, n, mu);
            // −1/(2(I+n+|μ|)²), assembled independently of `energy`
            let closed = Rational::new(-1, 2) / (&s * &s);
            let dim = weyl_dim(&level_weight(level, n, mu)).ok();
            let consistent = table.as_ref().map(|t| Some(t[level as usize].dim) == dim).unwrap_or(false);
            let below = level == 0 || energy(level - 1, n, mu) < e;
            Record::new("spectrum", n, mu, cfg.seed)
                .param("level", level)
                .ok(e == closed && e.signum() < 0 && below && consistent)
                .detail("energy", rational(&e))
                .detail("dim", dim)
                .detail("weight", weight(&level_weight(level, n, mu)))
        })
        .collect()
}

fn radial(n: usize, mu: &Rational, cfg: &RunConfig) -> Vec<Record> {
    let mut terms = 0;
    let mut ode_fail = Vec::new();
    let mut gram_fail = Vec::new();
    for l in 0..=cfg.lmax {
        for k in 1..=cfg.kmax {
            let res = radial_ode_residual(k, l, n, mu);
            let c = res.terms().count();
            if c > 0 {
                terms += c;
                ode_fail.push(json!([k, l]));
            }
            for k2 in 1..=cfg.kmax {
                let want = if k == k2 { Rational::ONE } else { Rational::ZERO };
                match twisted_radial_gram(k, k2, l, n, mu) {
                    Ok(v) if v == want => {}
                    Ok(v) => gram_fail.push(json!([k, k2, l, v.to_string()])),
                    Err(e) => gram_fail.push(json!([k, k2, l, e.to_string()])),
                }
            }
        }
    }
    let mut ode = Record::new("radial-ode", n, mu, cfg.seed).param("kmax", cfg.kmax).param("lmax", cfg.lmax).ok(ode_fail.is_empty());
    ode.residual_terms = terms;
    let ode = ode.detail("failures", ode_fail);
    let gram = Record::new("radial-gram", n, mu, cfg.seed)
        .param("kmax", cfg.kmax)
        .param("lmax", cfg.lmax)
        .ok(gram_fail.is_empty())
        .detail("failures", gram_fail);
    vec![ode, gram]
}

fn degeneracy(n: usize, mu: &Rational, cfg: &RunConfig) -> Record {
    let r = Record::new("degeneracy", n, mu, cfg.seed).param("imax", cfg.imax);
    match degeneracy_table(n, mu, cfg.imax) {
        Ok(rows) => r
            .detail("dims", rows.iter().map(|x| x.dim).collect::<Vec<_>>())
            .detail("energies", rows.iter().map(|x| rational(&x.energy)).collect::<Vec<_>>()),
        Err(e) => r.ok(false).detail("error", e.to_string()),
    }
}

fn branch(n: usize, mu: &Rational, cfg: &RunConfig) -> Vec<Record> {
    (0..=cfg.imax)
        .map(|level| {
            let r = Record::new("branch", n, mu, cfg.seed).param("level", level);
            let mut pieces = match branch_d_to_b(&level_weight(level, n, mu)) {
                Ok(p) => p,
                Err(e) => return r.ok(false).detail("error", e.to_string()),
            };
            pieces.sort();
            let mut orbital: Vec<Weight> = (0..=level).map(|l| orbital_weight(l, n, mu)).collect();
            orbital.sort();
            // each orbital piece carries the fiber representation exactly once
            let fiber = fiber_weight(n, mu);
            let mult: Vec<usize> = (0..=level)
                .map(|l| branch_b_to_d(&orbital_weight(l, n, mu)).map(|ws| ws.iter().filter(|w| **w == fiber).count()).unwrap_or(0))
                .collect();
            let ok = pieces == orbital && mult.iter().all(|m| *m == 1);
            r.ok(ok).detail("pieces", pieces.iter().map(weight).collect::<Vec<_>>()).detail("fiber_multiplicity", mult)
        })
        .collect()
}

fn method(m: Method) -> Value {
    match m {
        Method::Kappa(k) => json!({ "kappa": k }),
        Method::Nullspace => json!("nullspace"),
    }
}

/// Everything that needs the level-I highest section: ladder, hermiticity,
/// hamiltonian, expectation and (at I = 0) module-weight records.
fn level_records(lab: &Lab, level: u32, cfg: &RunConfig) -> Vec<Record> {
    let (n, mu) = (lab.ctx.n, lab.ctx.mu.clone());
    let rec = |check: &str| Record::new(check, n, &mu, cfg.seed).param("level", level);
    let hs = match highest_section(lab, level) {
        Ok(hs) => hs,
        Err(e) => {
            let mut names = vec!["ladder", "hamiltonian", "expectation"];
            if level == 0 {
                names.push("module-weight");
            }
            return names.into_iter().map(|c| rec(c).ok(false).detail("error", e.to_string())).collect();
        }
    };
    let mut out = Vec::new();
    if cfg.wants(Suite::Ladder) || cfg.wants(Suite::Hamiltonian) {
        out.extend(tower_records(lab, &hs, cfg));
    }
    if cfg.wants(Suite::Ladder) {
        out.push(hermiticity(lab, &hs, cfg));
    }
    let exp = ad_expectation(lab, Some(&hs), level);
    if cfg.wants(Suite::Expectation) {
        out.push(
            rec("expectation")
                .status(exp.status)
                .detail("beta_chain", rational(&exp.beta_chain))
                .detail("zonal", opt_scalar(&exp.zonal))
                .detail("section", opt_scalar(&exp.section))
                .detail("direct", opt_scalar(&exp.direct))
                .detail("eigenvalue", opt_scalar(&exp.eigenvalue))
                .detail("section_status", exp.section_status.map(|s| s.as_str())),
        );
    }
    if level == 0 && cfg.wants(Suite::ModuleWeight) {
        let m = module_weight_check(lab, &hs, &exp);
        out.push(
            Record::new("module-weight", n, &mu, cfg.seed)
                .status(m.status)
                .detail("expected", m.expected.iter().map(rational).collect::<Vec<_>>())
                .detail("observed", m.observed.iter().map(rational).collect::<Vec<_>>())
                .detail("section_last", opt_scalar(&m.section_last)),
        );
    }
    out
}

fn tower_records(lab: &Lab, hs: &HighestSection, cfg: &RunConfig) -> Vec<Record> {
    let (n, mu) = (lab.ctx.n, &lab.ctx.mu);
    let ham_steps = cfg.steps.saturating_sub(1);
    let t = tower(lab, hs, cfg.steps, if cfg.wants(Suite::Hamiltonian) { ham_steps } else { 0 });
    let ladder_ok = t.highest_ok
        && t.bottom_killed
        && t.steps.iter().all(|s| s.eigen_ok && s.nonzero && s.radial_constant.as_ref().is_some_and(|c| !c.is_zero()));
    let ladder = Record::new("ladder", n, mu, cfg.seed)
        .param("level", hs.level)
        .param("steps", cfg.steps)
        .ok(ladder_ok)
        .detail("method", method(hs.method))
        .detail("ansatz_size", hs.ansatz_size)
        .detail("highest_weight", t.highest_ok)
        .detail("bottom_killed", t.bottom_killed)
        .detail("eigenvalues", t.steps.iter().map(|s| rational(&s.eigenvalue)).collect::<Vec<_>>())
        .detail("eigen_ok", t.steps.iter().map(|s| s.eigen_ok).collect::<Vec<_>>())
        .detail("radial_constants", t.steps.iter().map(|s| opt_scalar(&s.radial_constant)).collect::<Vec<_>>())
        .detail("terms", t.steps.iter().map(|s| s.terms).collect::<Vec<_>>());
    let checked: Vec<_> = t.steps.iter().filter_map(|s| s.hamiltonian_ok.map(|ok| (s.j, ok))).collect();
    let ham = Record::new("hamiltonian", n, mu, cfg.seed)
        .param("level", hs.level)
        .param("steps", ham_steps)
        .ok(checked.len() as u32 == ham_steps + 1 && checked.iter().all(|(_, ok)| *ok))
        .detail("levels", checked.iter().map(|(j, _)| hs.level + j).collect::<Vec<_>>())
        .detail("energies", checked.iter().map(|(j, _)| rational(&energy(hs.level + j, n, mu))).collect::<Vec<_>>())
        .detail("ok", checked.iter().map(|(_, ok)| *ok).collect::<Vec<_>>());
    let mut out = Vec::new();
    if cfg.wants(Suite::Ladder) {
        out.push(ladder);
    }
    if cfg.wants(Suite::Hamiltonian) {
        out.push(ham);
    }
    out
}

/// ⟨a, X b⟩ = ⟨X a, b⟩ for the highest section and its first descendant.
fn hermiticity(lab: &Lab, hs: &HighestSection, cfg: &RunConfig) -> Record {
    let next = lower(lab, &hs.section);
    let pairs = [(&hs.section, &hs.section), (&hs.section, &next), (&next, &next)];
    let mut checked = Vec::new();
    let mut skipped = 0;
    let mut ok = true;
    for (a, b) in pairs {
        for (name, d) in hermiticity_defects(lab, a, b) {
            match d {
                Ok(d) => {
                    ok &= d.is_zero();
                    checked.push(json!({ "operator": name, "zero": d.is_zero() }));
                }
                Err(_) => skipped += 1,
            }
        }
    }
    Record::new("hermiticity", lab.ctx.n, &lab.ctx.mu, cfg.seed)
        .param("level", hs.level)
        .ok(ok && !checked.is_empty())
        .detail("checked", checked)
        .detail("divergent", skipped)
}

/// True when every record passed.
pub fn all_passed(records: &[Record]) -> bool {
    records.iter().all(Record::passed)
}
