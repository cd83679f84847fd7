use std::collections::BTreeMap;

use planar_core::PlaneGraph;

use crate::SeparatorError;

/// Reorders the edges of `(s,t)`-paths into non-crossing paths, sorted from one side to the
/// other. Paths are peeled off one at a time: leave `s` by the first unused edge in its
/// rotation, and at every later vertex take the first unused edge after the incoming one.
/// The multiset of directed edges is preserved.
pub fn sort_noncrossing(
    g: &PlaneGraph,
    paths: &[Vec<usize>],
    s: usize,
    t: usize,
) -> Result<Vec<Vec<usize>>, SeparatorError> {
    let mut arcs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for path in paths {
        if path.len() < 2 || path[0] != s || path[path.len() - 1] != t {
            return Err(SeparatorError::EndpointMismatch(s, t));
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(SeparatorError::BadParameters(format!("{}-{} is not an edge", w[0], w[1])));
            }
            *arcs.entry((w[0], w[1])).or_default() += 1;
        }
    }
    let mut out = Vec::with_capacity(paths.len());
    for _ in 0..paths.len() {
        let first = g.rotation(s).iter().copied().find(|&w| take(&mut arcs, s, w));
        let Some(first) = first else { return Err(SeparatorError::EndpointMismatch(s, t)) };
        let mut walk = vec![s, first];
        while *walk.last().expect("nonempty") != t {
            let u = walk[walk.len() - 1];
            let prev = walk[walk.len() - 2];
            let mut w = g.succ(u, prev);
            let mut found = None;
            for _ in 0..g.degree(u) {
                if take(&mut arcs, u, w) {
                    found = Some(w);
                    break;
                }
                w = g.succ(u, w);
            }
            let Some(next) = found else { return Err(SeparatorError::EndpointMismatch(s, t)) };
            if walk.contains(&next) {
                return Err(SeparatorError::CyclicPaths);
            }
            walk.push(next);
        }
        out.push(walk);
    }
    Ok(out)
}

fn take(arcs: &mut BTreeMap<(usize, usize), usize>, u: usize, w: usize) -> bool {
    match arcs.get_mut(&(u, w)) {
        Some(c) if *c > 0 => {
            *c -= 1;
            true
        }
        _ => false,
    }
}
