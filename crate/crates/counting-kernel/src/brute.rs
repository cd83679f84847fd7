use std::collections::HashMap;

use num_bigint::BigUint;
use pattern_catalog::PatSet;

use crate::subproblem::Subproblem;
use crate::table::{AnswerTable, Key};

struct Search<'a> {
    sub: &'a Subproblem,
    verts: Vec<usize>,
    on_boundary: Vec<bool>,
    /// Monitor indices per local vertex.
    hits: Vec<Vec<usize>>,
    upp: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    load: Vec<usize>,
    found: HashMap<Key, u64>,
    rep_cache: HashMap<(PatSet, PatSet), bool>,
}

impl Search<'_> {
    fn host_edge(&self, a: usize, b: usize) -> bool {
        self.sub.has_edge(self.verts[a], self.verts[b])
    }

    fn go(&mut self, v: usize) {
        let pattern = self.sub.ctx.pattern();
        let k = pattern.k();
        if v == k {
            self.record();
            return;
        }
        // leave v unmapped: no mapped interior neighbor may need it
        let blocked = (0..v).any(|u| {
            pattern.has_edge(u, v) && self.image[u].is_some_and(|a| !self.on_boundary[a])
        });
        if !blocked {
            self.go(v + 1);
        }
        let rule = self.sub.ctx.rule;
        for w in 0..self.verts.len() {
            if self.used[w] {
                continue;
            }
            let ok = (0..v).all(|u| match self.image[u] {
                Some(a) => rule.allows(pattern.has_edge(u, v), self.host_edge(a, w)),
                None => !(pattern.has_edge(u, v) && !self.on_boundary[w]),
            });
            if !ok || self.hits[w].iter().any(|&i| self.load[i] + 1 > self.upp[i]) {
                continue;
            }
            for &i in &self.hits[w] {
                self.load[i] += 1;
            }
            self.used[w] = true;
            self.image[v] = Some(w);
            self.go(v + 1);
            self.image[v] = None;
            self.used[w] = false;
            for &i in &self.hits[w] {
                self.load[i] -= 1;
            }
        }
    }

    fn record(&mut self) {
        let mut x = PatSet::EMPTY;
        let mut sep = PatSet::EMPTY;
        let mut f = Vec::new();
        for (v, img) in self.image.iter().enumerate() {
            if let Some(a) = *img {
                x = x.with(v);
                if self.on_boundary[a] {
                    sep = sep.with(v);
                    f.push(self.verts[a] as u32);
                }
            }
        }
        if !self.sub.monitors.iter().zip(&self.load).all(|(m, &l)| l >= m.low) {
            return;
        }
        let index = &self.sub.ctx.index;
        let is_rep = *self.rep_cache.entry((x, sep)).or_insert_with(|| index.representative(x, sep) == x);
        if !is_rep {
            return;
        }
        let r = self.load.iter().map(|&l| l as u8).collect();
        *self.found.entry(Key { r, sep, x, f }).or_default() += 1;
    }
}

/// Answer table of `sub` by enumerating every partial injective map of the pattern.
pub fn brute_table(sub: &Subproblem) -> AnswerTable {
    let verts = sub.verts.to_vec();
    let on_boundary = verts.iter().map(|&v| sub.boundary.contains(v)).collect();
    let hits = verts
        .iter()
        .map(|&v| sub.monitors.iter().enumerate().filter(|(_, m)| m.set.contains(v)).map(|(i, _)| i).collect())
        .collect();
    let k = sub.k();
    let mut search = Search {
        sub,
        on_boundary,
        hits,
        upp: sub.monitors.iter().map(|m| m.upp).collect(),
        image: vec![None; k],
        used: vec![false; verts.len()],
        load: vec![0; sub.monitors.len()],
        verts,
        found: HashMap::new(),
        rep_cache: HashMap::new(),
    };
    search.go(0);
    let mut table = AnswerTable::new();
    for (key, count) in search.found {
        table.add(key, BigUint::from(count));
    }
    table
}
