use counting_kernel::EdgeRule;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use pattern_catalog::Pattern;
use planar_core::Graph;

/// Pattern vertices in an order where every vertex after the first of its component has an
/// earlier neighbour.
fn search_order(pattern: &Pattern) -> Vec<usize> {
    let k = pattern.k();
    let mut seen = vec![false; k];
    let mut order = Vec::with_capacity(k);
    let mut roots: Vec<usize> = (0..k).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    for root in roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for w in pattern.neighbors(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// Number of injective maps from the pattern into the host that respect `rule`.
pub fn count_maps(pattern: &Pattern, host: &Graph, rule: EdgeRule) -> BigUint {
    let k = pattern.k();
    if k == 0 {
        return BigUint::one();
    }
    if k > host.n() {
        return BigUint::zero();
    }
    let order = search_order(pattern);
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| order[..i].iter().position(|&u| pattern.has_edge(u, v)))
        .collect();
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; host.n()];
    let mut total = BigUint::zero();
    extend(pattern, host, rule, &order, &anchor, 0, &mut image, &mut used, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn extend(
    pattern: &Pattern,
    host: &Graph,
    rule: EdgeRule,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    total: &mut BigUint,
) {
    if depth == order.len() {
        *total += 1u32;
        return;
    }
    let v = order[depth];
    let candidates: Vec<usize> = match anchor[depth] {
        Some(pos) => host.neighbors(image[order[pos]]).to_vec(),
        None => (0..host.n()).collect(),
    };
    for h in candidates {
        if used[h] {
            continue;
        }
        let fits = order[..depth]
            .iter()
            .all(|&u| rule.allows(pattern.has_edge(u, v), host.has_edge(image[u], h)));
        if !fits {
            continue;
        }
        used[h] = true;
        image[v] = h;
        extend(pattern, host, rule, order, anchor, depth + 1, image, used, total);
        used[h] = false;
    }
}

/// `|Aut(P)|`, which equals both `|ind(P,P)|` and `|sub(P,P)|`.
pub fn automorphisms(pattern: &Pattern) -> BigUint {
    count_maps(pattern, &pattern.to_graph(), EdgeRule::Induced)
}
