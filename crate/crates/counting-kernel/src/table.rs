use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use pattern_catalog::{PatSet, SeparationIndex};

/// Table key: monitor hits `r`, separator `S`, class representative `X`, and the boundary
/// images `f` of the vertices of `S` in increasing pattern-vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub r: Vec<u8>,
    pub sep: PatSet,
    pub x: PatSet,
    pub f: Vec<u32>,
}

impl Key {
    /// Image of pattern vertex `v` (which must lie in `sep`).
    pub fn image(&self, v: usize) -> usize {
        self.f[self.sep.rank(v)] as usize
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.sep.iter().zip(self.f.iter().map(|&w| w as usize))
    }
}

/// Sparse answer table; absent keys count zero.
///
/// The entry for `(r, (X, Y), f)` counts maps `g` of `P[X]` into the subproblem graph that obey
/// the edge rule, send exactly `X ∩ Y` into the boundary (as `f` prescribes), and hit every
/// monitor `i` exactly `r[i]` times.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnswerTable {
    pub entries: BTreeMap<Key, BigUint>,
}

impl AnswerTable {
    pub fn new() -> Self {
        AnswerTable::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&mut self, key: Key, value: BigUint) {
        if value.is_zero() {
            return;
        }
        *self.entries.entry(key).or_default() += value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &BigUint)> {
        self.entries.iter()
    }

    /// Value for an arbitrary (not necessarily representative) side `x`.
    pub fn get(&self, index: &SeparationIndex, r: &[u8], x: PatSet, sep: PatSet, f: &[u32]) -> BigUint {
        let key = Key { r: r.to_vec(), sep, x: index.representative(x, sep), f: f.to_vec() };
        self.entries.get(&key).cloned().unwrap_or_default()
    }

    /// Sum over all `r` and `f` of the entries of one separation class.
    pub fn class_total(&self, index: &SeparationIndex, x: PatSet, sep: PatSet) -> BigUint {
        let rep = index.representative(x, sep);
        self.entries.iter().filter(|(k, _)| k.sep == sep && k.x == rep).map(|(_, v)| v).sum()
    }

    /// Keeps only the first `m` monitor coordinates, merging entries that collide.
    pub fn truncated(&self, m: usize) -> AnswerTable {
        let mut out = AnswerTable::new();
        for (k, v) in &self.entries {
            let mut key = k.clone();
            key.r.truncate(m);
            out.add(key, v.clone());
        }
        out
    }

    /// Entries whose vector satisfies `keep`.
    pub fn filtered(&self, keep: impl Fn(&Key) -> bool) -> AnswerTable {
        AnswerTable { entries: self.entries.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }

    pub fn merge(&mut self, other: AnswerTable) {
        for (k, v) in other.entries {
            self.add(k, v);
        }
    }

    /// Tab-separated dump: `r`, separator, side, boundary map, count.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let r: Vec<String> = k.r.iter().map(u8::to_string).collect();
            let sep: Vec<String> = k.sep.iter().map(|v| v.to_string()).collect();
            let x: Vec<String> = k.x.iter().map(|v| v.to_string()).collect();
            let f: Vec<String> = k.f.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{v}", r.join(","), sep.join(","), x.join(","), f.join(","));
        }
        out
    }
}
