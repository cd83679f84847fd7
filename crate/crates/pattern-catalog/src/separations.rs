//! Separation classes of a pattern.
//!
//! For a fixed separator `S`, two separations `(X, Y)` and `(X', Y')` with `X ∩ Y = X' ∩ Y' = S`
//! are isomorphic exactly when the components of `P − S` inside `X` and inside `X'` agree as a
//! multiset of component types, where the type of a component `C` is the canonical form of
//! `P[C ∪ S]` with every vertex of `S` in its own color.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::canon::{canonical_form, CanonicalForm, ColoredGraph};
use crate::pattern::Pattern;
use crate::patset::PatSet;

/// Colors used when canonizing a whole separation.
pub const COLOR_X: u32 = 1;
pub const COLOR_Y: u32 = 2;
const COLOR_SEP_BASE: u32 = 3;

/// Components of `P − S` and their types.
#[derive(Clone, Debug)]
pub struct SeparatorInfo {
    pub separator: PatSet,
    /// Components ordered by smallest vertex.
    pub components: Vec<PatSet>,
    /// Type id per component; ids index `types`.
    pub kind: Vec<usize>,
    pub types: Vec<CanonicalForm>,
}

impl SeparatorInfo {
    fn build(pattern: &Pattern, sep: PatSet) -> Self {
        let components = pattern.components(pattern.all().minus(sep));
        let mut types: Vec<CanonicalForm> = Vec::new();
        let mut kind = Vec::with_capacity(components.len());
        for &comp in &components {
            let form = component_form(pattern, sep, comp);
            let id = match types.iter().position(|t| *t == form) {
                Some(id) => id,
                None => {
                    types.push(form);
                    types.len() - 1
                }
            };
            kind.push(id);
        }
        SeparatorInfo { separator: sep, components, kind, types }
    }

    /// Count of components of each type lying inside `within`.
    pub fn profile(&self, within: PatSet) -> Vec<usize> {
        let mut q = vec![0; self.types.len()];
        for (i, comp) in self.components.iter().enumerate() {
            if comp.is_subset(within) {
                q[self.kind[i]] += 1;
            }
        }
        q
    }

    /// Side `X` built from the first `q[t]` components of each type `t`.
    pub fn representative_of_profile(&self, q: &[usize]) -> PatSet {
        self.representative_within(q, PatSet(u64::MAX))
    }

    /// As `representative_of_profile`, drawing only components inside `within`.
    pub fn representative_within(&self, q: &[usize], within: PatSet) -> PatSet {
        let mut left = q.to_vec();
        let mut x = self.separator;
        for (i, &comp) in self.components.iter().enumerate() {
            if left[self.kind[i]] > 0 && comp.is_subset(within) {
                left[self.kind[i]] -= 1;
                x = x.union(comp);
            }
        }
        x
    }

    /// All sides `X` with the same profile as `x` (including `x`).
    pub fn members(&self, x: PatSet) -> Vec<PatSet> {
        let q = self.profile(x);
        let mut out = vec![self.separator];
        for (t, &want) in q.iter().enumerate() {
            let pool: Vec<PatSet> =
                self.components.iter().zip(&self.kind).filter(|(_, &k)| k == t).map(|(&c, _)| c).collect();
            let picks = choose(&pool, want);
            out = out.iter().flat_map(|&base| picks.iter().map(move |&p| base.union(p))).collect();
        }
        out.sort_unstable();
        out
    }
}

/// Unions of all `r`-subsets of `pool`.
fn choose(pool: &[PatSet], r: usize) -> Vec<PatSet> {
    fn go(pool: &[PatSet], r: usize, acc: PatSet, out: &mut Vec<PatSet>) {
        if r == 0 {
            out.push(acc);
            return;
        }
        for i in 0..pool.len() {
            if pool.len() - i < r {
                break;
            }
            go(&pool[i + 1..], r - 1, acc.union(pool[i]), out);
        }
    }
    let mut out = Vec::new();
    go(pool, r, PatSet::EMPTY, &mut out);
    out
}

fn component_form(pattern: &Pattern, sep: PatSet, comp: PatSet) -> CanonicalForm {
    let keep = sep.union(comp);
    let sub = pattern.induced(keep);
    let colors = keep
        .iter()
        .map(|v| if sep.contains(v) { COLOR_SEP_BASE + v as u32 } else { COLOR_X })
        .collect();
    canonical_form(&ColoredGraph::new(&sub, colors))
}

/// Canonical form of the separation `(X, Y)` with separator `sep`: separator vertices keep
/// their identity, `X \ S` and `Y \ S` get one color each.
pub fn separation_form(pattern: &Pattern, x: PatSet, sep: PatSet) -> CanonicalForm {
    let colors = (0..pattern.k())
        .map(|v| {
            if sep.contains(v) {
                COLOR_SEP_BASE + v as u32
            } else if x.contains(v) {
                COLOR_X
            } else {
                COLOR_Y
            }
        })
        .collect();
    canonical_form(&ColoredGraph::new(pattern, colors))
}

/// Per-pattern cache of separator information, shared across threads.
#[derive(Debug)]
pub struct SeparationIndex {
    pattern: Pattern,
    cache: RwLock<HashMap<PatSet, Arc<SeparatorInfo>>>,
}

impl SeparationIndex {
    pub fn new(pattern: Pattern) -> Self {
        SeparationIndex { pattern, cache: RwLock::new(HashMap::new()) }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn info(&self, sep: PatSet) -> Arc<SeparatorInfo> {
        if let Some(info) = self.cache.read().expect("cache lock").get(&sep) {
            return Arc::clone(info);
        }
        let built = Arc::new(SeparatorInfo::build(&self.pattern, sep));
        let mut w = self.cache.write().expect("cache lock");
        Arc::clone(w.entry(sep).or_insert(built))
    }

    pub fn is_separation(&self, x: PatSet, sep: PatSet) -> bool {
        self.pattern.is_separation(x, sep)
    }

    /// Class representative of the separation with side `x` and separator `sep`.
    pub fn representative(&self, x: PatSet, sep: PatSet) -> PatSet {
        let info = self.info(sep);
        info.representative_of_profile(&info.profile(x))
    }

    /// Every side in the class of `x`.
    pub fn members(&self, x: PatSet, sep: PatSet) -> Vec<PatSet> {
        self.info(sep).members(x)
    }
}

/// One class of a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub separator: PatSet,
    pub x: PatSet,
    pub y: PatSet,
    pub canonical: CanonicalForm,
    /// Number of separations below `Z` in this class.
    pub multiplicity: u128,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.separator.len()
    }
}

/// Pairwise non-isomorphic separations of order at most `order` with `X ⊆ Z`.
#[derive(Clone, Debug)]
pub struct SeparationCatalog {
    pub order: usize,
    pub within: PatSet,
    pub entries: Vec<CatalogEntry>,
}

impl SeparationCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> u128 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Catalog of separations below `within` of order at most `order`.
pub fn enumerate_separations(index: &SeparationIndex, order: usize, within: PatSet) -> SeparationCatalog {
    let all = index.pattern().all();
    let within = within.inter(all);
    let mut entries = Vec::new();
    for sep in within.subsets().filter(|s| s.len() <= order) {
        let info = index.info(sep);
        let qz = info.profile(within);
        let mut q = vec![0usize; qz.len()];
        loop {
            let x = info.representative_within(&q, within);
            let multiplicity = qz.iter().zip(&q).map(|(&z, &c)| binomial(z, c)).product();
            entries.push(CatalogEntry {
                separator: sep,
                x,
                y: all.minus(x.minus(sep)),
                canonical: separation_form(index.pattern(), x, sep),
                multiplicity,
            });
            // next profile vector below qz, odometer order
            let Some(pos) = (0..q.len()).find(|&i| q[i] < qz[i]) else { break };
            q[pos] += 1;
            for slot in q.iter_mut().take(pos) {
                *slot = 0;
            }
        }
    }
    SeparationCatalog { order, within, entries }
}

/// Catalog sizes `|Sep_{≤j}|` for `j = 0..=order`, with `Z = V(P)`.
pub fn sigma_profile(index: &SeparationIndex, order: usize) -> Vec<usize> {
    let all = index.pattern().all();
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for e in enumerate_separations(index, order, all).entries {
        *by_order.entry(e.order()).or_default() += 1;
    }
    let mut acc = 0;
    (0..=order)
        .map(|j| {
            acc += by_order.get(&j).copied().unwrap_or(0);
            acc
        })
        .collect()
}

type CatalogKey = (usize, PatSet);

/// Catalogs memoized by `(order, Z)` for one pattern.
#[derive(Debug)]
pub struct CatalogCache {
    index: Arc<SeparationIndex>,
    built: RwLock<HashMap<CatalogKey, Arc<SeparationCatalog>>>,
}

impl CatalogCache {
    pub fn new(index: Arc<SeparationIndex>) -> Self {
        CatalogCache { index, built: RwLock::new(HashMap::new()) }
    }

    pub fn get(&self, order: usize, within: PatSet) -> Arc<SeparationCatalog> {
        let key = (order, within);
        if let Some(cat) = self.built.read().expect("catalog lock").get(&key) {
            return Arc::clone(cat);
        }
        let cat = Arc::new(enumerate_separations(&self.index, order, within));
        Arc::clone(self.built.write().expect("catalog lock").entry(key).or_insert(cat))
    }
}
