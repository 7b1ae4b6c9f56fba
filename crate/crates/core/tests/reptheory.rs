use std::collections::{BTreeMap, BTreeSet};

use micz_core::exact::Rational;
use micz_core::reptheory::{
    branch_b_to_d, branch_d_to_b, degeneracy_table, fiber_weight, level_weight, module_highest_weight, orbital_weight, weyl_dim, Algebra,
    Weight,
};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn w(algebra: Algebra, comps: &[Rational]) -> Weight {
    Weight::new(algebra, comps.to_vec())
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|x| Rational::int(*x)).collect()
}

fn unit(n: usize, i: usize, s: i64) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; n];
    v[i] = Rational::int(s);
    v
}

fn plus(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::ZERO, |acc, (x, y)| acc + x * y)
}

fn positive_roots(alg: Algebra, n: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(plus(&unit(n, i, 1), &unit(n, j, -1)));
            out.push(plus(&unit(n, i, 1), &unit(n, j, 1)));
        }
        if alg == Algebra::B {
            out.push(unit(n, i, 1));
        }
    }
    out
}

fn simple_roots(alg: Algebra, n: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<_> = (0..n - 1).map(|i| plus(&unit(n, i, 1), &unit(n, i + 1, -1))).collect();
    match alg {
        Algebra::B => out.push(unit(n, n - 1, 1)),
        Algebra::D if n >= 2 => out.push(plus(&unit(n, n - 2, 1), &unit(n, n - 1, 1))),
        Algebra::D => {}
    }
    out
}

fn rho(alg: Algebra, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| {
            let base = Rational::int((n - 1 - i) as i64);
            if alg == Algebra::B {
                base + q(1, 2)
            } else {
                base
            }
        })
        .collect()
}

/// Weight multiplicities by Freudenthal's recursion.
fn freudenthal(hw: &Weight) -> BTreeMap<Vec<Rational>, u64> {
    let (alg, n) = (hw.algebra, hw.rank());
    let lam = hw.comps.clone();
    let rho = rho(alg, n);
    let pos = positive_roots(alg, n);
    let simple = simple_roots(alg, n);
    let lr = plus(&lam, &rho);
    let top = dot(&lr, &lr);
    let depth = |m: &[Rational]| dot(&plus(&lam, &m.iter().map(|x| -x.clone()).collect::<Vec<_>>()), &rho);
    let mut mult: BTreeMap<Vec<Rational>, u64> = BTreeMap::new();
    let mut queue: BTreeMap<Rational, BTreeSet<Vec<Rational>>> = BTreeMap::new();
    mult.insert(lam.clone(), 1);
    for a in &simple {
        let m = plus(&lam, &a.iter().map(|x| -x.clone()).collect::<Vec<_>>());
        queue.entry(depth(&m)).or_default().insert(m);
    }
    while let Some((_, layer)) = queue.pop_first() {
        for mu in layer {
            let mr = plus(&mu, &rho);
            let den = &top - &dot(&mr, &mr);
            let mut num = Rational::ZERO;
            for a in &pos {
                let mut k = 1;
                loop {
                    let scaled: Vec<Rational> = a.iter().map(|x| x * Rational::int(k)).collect();
                    let up = plus(&mu, &scaled);
                    match mult.get(&up) {
                        Some(m) => num += &(Rational::int(*m as i64) * dot(&up, a)),
                        None if dot(&up, &up) > dot(&lam, &lam) => break,
                        None => {}
                    }
                    k += 1;
                }
            }
            // off the weight set both sides of the recursion vanish
            if den.is_zero() {
                assert!(num.is_zero());
                continue;
            }
            let m = (num * Rational::int(2) / den).to_i64().unwrap();
            if m > 0 {
                mult.insert(mu.clone(), m as u64);
                for a in &simple {
                    let next = plus(&mu, &a.iter().map(|x| -x.clone()).collect::<Vec<_>>());
                    if !mult.contains_key(&next) {
                        queue.entry(depth(&next)).or_default().insert(next);
                    }
                }
            }
        }
    }
    mult
}

fn restrict(m: &BTreeMap<Vec<Rational>, u64>, keep: usize) -> BTreeMap<Vec<Rational>, u64> {
    let mut out = BTreeMap::new();
    for (k, v) in m {
        *out.entry(k[..keep].to_vec()).or_insert(0) += v;
    }
    out
}

fn merge(ws: &[Weight]) -> BTreeMap<Vec<Rational>, u64> {
    let mut out = BTreeMap::new();
    for w in ws {
        for (k, v) in freudenthal(w) {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out
}

fn dominant(alg: Algebra, ranks: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Weight> {
    (proptest::collection::vec(0i64..4, ranks), any::<bool>(), any::<bool>()).prop_map(move |(steps, half, flip)| {
        // m_1 ≥ … ≥ m_n ≥ 0 from non-negative steps
        let mut comps: Vec<Rational> = Vec::new();
        let mut acc = if half { q(1, 2) } else { Rational::ZERO };
        for s in steps.iter().rev() {
            acc += &Rational::int(*s);
            comps.push(acc.clone());
        }
        comps.reverse();
        if alg == Algebra::D && flip {
            let last = comps.len() - 1;
            comps[last] = -comps[last].clone();
        }
        Weight::new(alg, comps)
    })
}

#[test]
fn weyl_dim_examples() {
    for l in 0..6 {
        assert_eq!(weyl_dim(&w(Algebra::B, &ints(&[l]))).unwrap(), 2 * l as u64 + 1);
        assert_eq!(weyl_dim(&w(Algebra::D, &ints(&[l, 0]))).unwrap(), ((l + 1) * (l + 1)) as u64);
        let half = [Rational::int(l) + q(1, 2), q(1, 2)];
        assert_eq!(weyl_dim(&w(Algebra::D, &half)).unwrap(), ((l + 1) * (l + 2)) as u64);
    }
    // spinors and vectors
    assert_eq!(weyl_dim(&w(Algebra::B, &[q(1, 2), q(1, 2)])).unwrap(), 4);
    assert_eq!(weyl_dim(&w(Algebra::D, &ints(&[1, 0, 0]))).unwrap(), 6);
    assert!(weyl_dim(&w(Algebra::B, &ints(&[0, 1]))).is_err());
    assert!(weyl_dim(&w(Algebra::D, &[q(1, 2), Rational::ZERO])).is_err());
}

#[test]
fn branch_examples() {
    for l in 0..5i64 {
        let got: Vec<Rational> = branch_b_to_d(&w(Algebra::B, &ints(&[l]))).unwrap().into_iter().map(|x| x.comps[0].clone()).collect();
        assert_eq!(got, (-l..=l).map(Rational::int).collect::<Vec<_>>());
    }
    let down = branch_d_to_b(&w(Algebra::D, &ints(&[1, 0]))).unwrap();
    assert_eq!(down, vec![w(Algebra::B, &ints(&[0])), w(Algebra::B, &ints(&[1]))]);
}

#[test]
fn orbital_contains_fiber_once() {
    for n in 1..=3 {
        for mu in [Rational::ZERO, q(1, 2), q(-1, 2), Rational::ONE, q(-3, 2)] {
            for l in 0..4 {
                let pieces = branch_b_to_d(&orbital_weight(l, n, &mu)).unwrap();
                let hits = pieces.iter().filter(|p| **p == fiber_weight(n, &mu)).count();
                assert_eq!(hits, 1, "n={n} mu={mu} l={l}");
            }
        }
    }
}

#[test]
fn degeneracy_examples() {
    let dims = |n: usize, mu: Rational| degeneracy_table(n, &mu, 4).unwrap().into_iter().map(|r| r.dim).collect::<Vec<_>>();
    assert_eq!(dims(1, Rational::ZERO), vec![1, 4, 9, 16, 25]);
    assert_eq!(dims(1, q(1, 2)), vec![2, 6, 12, 20, 30]);
    assert_eq!(dims(1, q(-1, 2)), vec![2, 6, 12, 20, 30]);
    let rows = degeneracy_table(2, &Rational::ZERO, 8).unwrap();
    for r in &rows {
        assert_eq!(r.dim, weyl_dim(&level_weight(r.level, 2, &Rational::ZERO)).unwrap());
    }
}

#[test]
fn module_weight_examples() {
    assert_eq!(module_highest_weight(1, &Rational::ZERO), ints(&[-1, 0, 0]));
    assert_eq!(module_highest_weight(1, &q(1, 2)), vec![q(-3, 2), q(1, 2), q(1, 2)]);
    assert_eq!(module_highest_weight(2, &q(-1, 2)), vec![q(-5, 2), q(1, 2), q(1, 2), q(-1, 2)]);
}

#[test]
fn freudenthal_agrees_on_small_cases() {
    // the oracle itself: B₁ spin l has weights −l..l once each
    let m = freudenthal(&w(Algebra::B, &ints(&[3])));
    assert_eq!(m.len(), 7);
    assert!(m.values().all(|v| *v == 1));
    // adjoint of so(5): zero weight twice
    let adj = freudenthal(&w(Algebra::B, &ints(&[1, 1])));
    assert_eq!(adj[&ints(&[0, 0])], 2);
    assert_eq!(adj.values().sum::<u64>(), 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_matches_freudenthal_b(hw in dominant(Algebra::B, 1..=2)) {
        prop_assert_eq!(weyl_dim(&hw).unwrap(), freudenthal(&hw).values().sum::<u64>());
    }

    #[test]
    fn weyl_matches_freudenthal_d(hw in dominant(Algebra::D, 2..=2)) {
        prop_assert_eq!(weyl_dim(&hw).unwrap(), freudenthal(&hw).values().sum::<u64>());
    }

    #[test]
    fn b_to_d_restricts_characters(hw in dominant(Algebra::B, 2..=2)) {
        let pieces = branch_b_to_d(&hw).unwrap();
        prop_assert_eq!(merge(&pieces), freudenthal(&hw));
        let total: u64 = pieces.iter().map(|p| weyl_dim(p).unwrap()).sum();
        prop_assert_eq!(total, weyl_dim(&hw).unwrap());
    }

    #[test]
    fn d_to_b_restricts_characters(hw in dominant(Algebra::D, 2..=3)) {
        let n = hw.rank() - 1;
        let pieces = branch_d_to_b(&hw).unwrap();
        prop_assert_eq!(merge(&pieces), restrict(&freudenthal(&hw), n));
        let total: u64 = pieces.iter().map(|p| weyl_dim(p).unwrap()).sum();
        prop_assert_eq!(total, weyl_dim(&hw).unwrap());
    }

    #[test]
    fn degeneracy_is_consistent(n in 1usize..4, twice_mu in -4i64..5) {
        let mu = Rational::half(twice_mu);
        prop_assert!(degeneracy_table(n, &mu, 6).is_ok());
    }
}
