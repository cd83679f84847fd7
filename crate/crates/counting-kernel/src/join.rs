use std::collections::HashMap;

use num_bigint::BigUint;
use pattern_catalog::PatSet;
use planar_core::VSet;

use crate::monitor::MonitorSet;
use crate::subproblem::{PatternContext, Subproblem};
use crate::table::{AnswerTable, Key};
use crate::KernelError;

/// A concrete side of a table entry (class members expanded).
struct Side<'a> {
    x: PatSet,
    key: &'a Key,
    value: &'a BigUint,
}

fn expand<'a>(ctx: &PatternContext, table: &'a AnswerTable) -> Vec<Side<'a>> {
    let mut out = Vec::new();
    for (key, value) in table.iter() {
        for x in ctx.index.members(key.x, key.sep) {
            out.push(Side { x, key, value });
        }
    }
    out
}

/// Pattern vertices of `key` whose image lies in `set`, with those images.
fn restrict(key: &Key, set: &VSet) -> (PatSet, Vec<u32>) {
    let mut sub = PatSet::EMPTY;
    let mut f = Vec::new();
    for (v, w) in key.pairs() {
        if set.contains(w) {
            sub = sub.with(v);
            f.push(w as u32);
        }
    }
    (sub, f)
}

/// Combines tables of `G[V1]` and `G[V2]` into a table of `G[V1 ∪ V2]` with boundary `target`.
///
/// Both child boundaries must contain `shared = V1 ∩ V2`, and `target ∩ Vi` must lie in the
/// boundary of child `i`. The result is indexed by the first `monitors.len()` coordinates of
/// the child vectors and filtered by the ranges of `monitors`.
pub fn join(
    ctx: &PatternContext,
    left: &AnswerTable,
    right: &AnswerTable,
    shared: &VSet,
    target: &VSet,
    monitors: &MonitorSet,
) -> AnswerTable {
    let pattern = ctx.pattern();
    let m = monitors.len();
    let mut buckets: HashMap<(PatSet, Vec<u32>), Vec<Side<'_>>> = HashMap::new();
    for side in expand(ctx, right) {
        buckets.entry(restrict(side.key, shared)).or_default().push(side);
    }
    let mut out = AnswerTable::new();
    let mut rep_cache: HashMap<(PatSet, PatSet), bool> = HashMap::new();
    for a in expand(ctx, left) {
        let (sh, fh) = restrict(a.key, shared);
        let Some(partners) = buckets.get(&(sh, fh)) else { continue };
        let only_a = a.x.minus(sh);
        let reach_a = pattern.boundary_of(only_a);
        let overlap: Vec<u8> = monitors
            .iter()
            .map(|mon| sh.iter().filter(|&v| mon.set.contains(a.key.image(v))).count() as u8)
            .collect();
        for b in partners {
            if a.x.inter(b.x) != sh || !reach_a.inter(b.x.minus(sh)).is_empty() {
                continue;
            }
            let r: Vec<u8> = (0..m).map(|i| a.key.r[i] + b.key.r[i] - overlap[i]).collect();
            if !monitors.admits(&r) {
                continue;
            }
            let x = a.x.union(b.x);
            let mut pairs: Vec<(usize, usize)> =
                a.key.pairs().chain(b.key.pairs().filter(|(v, _)| !sh.contains(*v))).collect();
            pairs.retain(|&(_, w)| target.contains(w));
            pairs.sort_unstable();
            let sep: PatSet = pairs.iter().map(|&(v, _)| v).collect();
            let keep = *rep_cache.entry((x, sep)).or_insert_with(|| {
                pattern.is_separation(x, sep) && ctx.index.representative(x, sep) == x
            });
            if !keep {
                continue;
            }
            let f = pairs.iter().map(|&(_, w)| w as u32).collect();
            out.add(Key { r, sep, x, f }, a.value * b.value);
        }
    }
    out
}

/// Shrinks the boundary to `keep`: pattern vertices mapped outside `keep` leave the separator.
pub fn forget(ctx: &PatternContext, table: &AnswerTable, keep: &VSet) -> AnswerTable {
    let pattern = ctx.pattern();
    let mut out = AnswerTable::new();
    for side in expand(ctx, table) {
        let (sep, f) = restrict(side.key, keep);
        if !pattern.is_separation(side.x, sep) || ctx.index.representative(side.x, sep) != side.x {
            continue;
        }
        out.add(Key { r: side.key.r.clone(), sep, x: side.x, f }, side.value.clone());
    }
    out
}

/// Children `(G[V1], (B ∩ V1) ∪ S, M1)` and `(G[V2], (B ∩ V2) ∪ S, M2)` with `S = V1 ∩ V2`.
///
/// `Mi` is `M` cut down to `Vi` with lower bounds dropped, followed by one cap monitor.
pub fn derive_split_subproblems(
    sub: &Subproblem,
    v1: &VSet,
    v2: &VSet,
) -> Result<(Subproblem, Subproblem), KernelError> {
    if v1.union(v2) != sub.verts {
        return Err(KernelError::NotASeparation("sides do not cover the graph".into()));
    }
    let only1 = v1.difference(v2);
    let only2 = v2.difference(v1);
    for a in only1.iter() {
        if sub.host.graph.neighbors(a).iter().any(|&b| only2.contains(b)) {
            return Err(KernelError::NotASeparation(format!("edge {a} crosses the split")));
        }
    }
    let shared = v1.intersection(v2);
    let child = |vs: &VSet| {
        let boundary = sub.boundary.intersection(vs).union(&shared);
        let monitors = sub.monitors.split_child(&sub.verts, vs, sub.k());
        sub.on(vs.clone(), boundary, monitors)
    };
    Ok((child(v1), child(v2)))
}

/// Parent table from the tables of the two split children.
pub fn sparse_separation_combine(
    sub: &Subproblem,
    v1: &VSet,
    v2: &VSet,
    left: &AnswerTable,
    right: &AnswerTable,
) -> AnswerTable {
    join(&sub.ctx, left, right, &v1.intersection(v2), &sub.boundary, &sub.monitors)
}
