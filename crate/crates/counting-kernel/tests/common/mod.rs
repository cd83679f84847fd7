#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use counting_kernel::{AnswerTable, EdgeRule, Host, Monitor, MonitorRole, MonitorSet, PatternContext, Subproblem};
use num_bigint::BigUint;
use pattern_catalog::{PatSet, Pattern};
use planar_core::{embed, Graph, VSet};
use proptest::prelude::*;

/// Stacked triangulation grown by splitting faces, then thinned.
pub fn random_planar(n: usize, choices: &[usize], keep_permille: usize) -> Graph {
    let n = n.max(3);
    let mut faces = vec![[0usize, 1, 2], [0, 2, 1]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut pick = choices.iter().cycle();
    for v in 3..n {
        let f = pick.next().copied().unwrap_or(0) % faces.len();
        let [a, b, c] = faces.swap_remove(f);
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        edges.extend([(a.min(v), a.max(v)), (b.min(v), b.max(v)), (c.min(v), c.max(v))]);
    }
    let kept: Vec<_> = edges.into_iter().filter(|_| pick.next().copied().unwrap_or(0) % 1000 < keep_permille).collect();
    Graph::from_edges(n, &kept).unwrap()
}

pub fn host(g: &Graph) -> Arc<Host> {
    Host::new(embed(g).unwrap())
}

pub fn pattern_from(k: usize, coins: &[bool]) -> Pattern {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..k {
        for v in u + 1..k {
            if coins[i % coins.len()] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Pattern::from_edges(k, &edges).unwrap()
}

/// Concrete entries `(r, X, S, f) -> count` by enumerating every injective map of every `P[X]`.
pub fn oracle_entries(sub: &Subproblem) -> BTreeMap<(Vec<u8>, PatSet, PatSet, Vec<u32>), u64> {
    let p = sub.ctx.pattern();
    let verts = sub.verts.to_vec();
    let mut out = BTreeMap::new();
    for x in p.all().subsets() {
        let dom: Vec<usize> = x.iter().collect();
        let mut img = vec![0usize; dom.len()];
        maps(&verts, dom.len(), &mut img, 0, &mut |g: &[usize]| {
            for i in 0..dom.len() {
                for j in i + 1..dom.len() {
                    if !sub.ctx.rule.allows(p.has_edge(dom[i], dom[j]), sub.has_edge(g[i], g[j])) {
                        return;
                    }
                }
            }
            let sep: PatSet = dom.iter().zip(g).filter(|(_, &w)| sub.boundary.contains(w)).map(|(&v, _)| v).collect();
            if !p.is_separation(x, sep) {
                return;
            }
            let r: Vec<u8> = sub
                .monitors
                .iter()
                .map(|m| g.iter().filter(|&&w| m.set.contains(w)).count() as u8)
                .collect();
            if !sub.monitors.admits(&r) {
                return;
            }
            let f: Vec<u32> = dom.iter().zip(g).filter(|(&v, _)| sep.contains(v)).map(|(_, &w)| w as u32).collect();
            *out.entry((r, x, sep, f)).or_insert(0) += 1;
        });
    }
    out
}

fn maps(verts: &[usize], len: usize, img: &mut Vec<usize>, at: usize, visit: &mut dyn FnMut(&[usize])) {
    if at == len {
        visit(img);
        return;
    }
    for &w in verts {
        if img[..at].contains(&w) {
            continue;
        }
        img[at] = w;
        maps(verts, len, img, at + 1, visit);
    }
}

/// Asserts that `table` agrees with the oracle on every concrete entry and holds nothing else.
pub fn assert_matches_oracle(sub: &Subproblem, table: &AnswerTable) {
    let oracle = oracle_entries(sub);
    let index = &sub.ctx.index;
    let mut rep_total = BigUint::default();
    for ((r, x, sep, f), count) in &oracle {
        assert_eq!(table.get(index, r, *x, *sep, f), BigUint::from(*count), "entry r={r:?} x={x:?} sep={sep:?} f={f:?}");
        if index.representative(*x, *sep) == *x {
            rep_total += BigUint::from(*count);
        }
    }
    let table_total: BigUint = table.iter().map(|(_, v)| v).sum();
    assert_eq!(table_total, rep_total, "table holds entries the oracle does not know");
}

/// A small random subproblem: host, pattern, boundary, up to two monitors.
#[derive(Clone, Debug)]
pub struct Case {
    pub n: usize,
    pub choices: Vec<usize>,
    pub keep: usize,
    pub k: usize,
    pub coins: Vec<bool>,
    pub boundary: Vec<bool>,
    pub monitor_bits: Vec<(Vec<bool>, usize, usize)>,
    pub rule: bool,
}

pub fn case(max_n: usize, max_k: usize) -> impl Strategy<Value = Case> {
    (
        3..=max_n,
        proptest::collection::vec(0usize..10_000, 40),
        400usize..=1000,
        1..=max_k,
        proptest::collection::vec(any::<bool>(), 10),
        proptest::collection::vec(proptest::bool::weighted(0.3), max_n),
        proptest::collection::vec((proptest::collection::vec(any::<bool>(), max_n), 0usize..3, 0usize..5), 0..3),
        any::<bool>(),
    )
        .prop_map(|(n, choices, keep, k, coins, boundary, monitor_bits, rule)| Case {
            n,
            choices,
            keep,
            k,
            coins,
            boundary,
            monitor_bits,
            rule,
        })
}

impl Case {
    pub fn build(&self) -> Subproblem {
        let g = random_planar(self.n, &self.choices, self.keep);
        let n = g.n();
        let rule = if self.rule { EdgeRule::Induced } else { EdgeRule::Subgraph };
        let ctx = PatternContext::new(pattern_from(self.k, &self.coins), rule);
        let top = Subproblem::top(host(&g), ctx);
        let boundary = VSet::from_iter_in(n, (0..n).filter(|&v| self.boundary[v % self.boundary.len()]));
        let mut monitors = top.monitors.clone();
        for (bits, low, span) in &self.monitor_bits {
            let set = VSet::from_iter_in(n, (0..n).filter(|&v| bits[v % bits.len()]));
            let low = (*low).min(self.k);
            let upp = (low + span).min(self.k);
            monitors.push(Monitor::new(set, low, upp, MonitorRole::Small));
        }
        top.on(top.verts.clone(), boundary, monitors)
    }
}

pub fn whole(sub: &Subproblem) -> MonitorSet {
    sub.monitors.clone()
}
