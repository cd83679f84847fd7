use counting_kernel::EdgeRule;
use num_bigint::BigUint;
use pattern_catalog::{PatSet, Pattern};
use planar_core::Graph;
use solver::Digraph;

use crate::HarnessError;

/// Default cap on `k!·C(n,k)·k²`.
pub const DEFAULT_BUDGET: f64 = 1e11;

/// Optional filters on the enumerated maps.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Pattern vertices that are mapped; all of them when `None`.
    pub domain: Option<PatSet>,
    /// `(pattern vertex, host vertex)` pairs the map must contain.
    pub pins: Vec<(usize, usize)>,
    /// Host vertices the image may use; all when `None`.
    pub allowed: Option<Vec<usize>>,
    /// Host sets with the exact number of image vertices they must contain.
    pub hits: Vec<(Vec<usize>, usize)>,
}

/// `k!·C(n,k)·k²`, the work bound of the enumeration.
pub fn enumeration_cost(k: usize, n: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let falling: f64 = (n - k + 1..=n).map(|x| x as f64).product();
    falling * (k * k).max(1) as f64
}

/// Injective maps of the domain of `pattern` into `host` respecting `rule` and `constraints`.
pub fn oracle_count(pattern: &Pattern, host: &Graph, rule: EdgeRule, constraints: &Constraints) -> Result<BigUint, HarnessError> {
    oracle_count_within(pattern, host, rule, constraints, DEFAULT_BUDGET)
}

pub fn oracle_count_within(
    pattern: &Pattern,
    host: &Graph,
    rule: EdgeRule,
    constraints: &Constraints,
    budget: f64,
) -> Result<BigUint, HarnessError> {
    let domain: Vec<usize> = constraints.domain.unwrap_or(pattern.all()).iter().collect();
    let cost = enumeration_cost(domain.len(), host.n());
    if cost > budget {
        return Err(HarnessError::Budget(cost));
    }
    let mut allowed = vec![constraints.allowed.is_none(); host.n()];
    for &h in constraints.allowed.iter().flatten() {
        allowed[h] = true;
    }
    let mut pin = vec![None; pattern.k()];
    for &(v, h) in &constraints.pins {
        pin[v] = Some(h);
    }
    let fits = |image: &[usize], at: usize, h: usize| {
        let v = domain[at];
        (0..at).all(|i| {
            let u = domain[i];
            let ok = match rule {
                EdgeRule::Induced => pattern.has_edge(u, v) == host.has_edge(image[i], h),
                EdgeRule::Subgraph => !pattern.has_edge(u, v) || host.has_edge(image[i], h),
            };
            ok && image[i] != h
        })
    };
    let complete = |image: &[usize]| {
        constraints.hits.iter().all(|(set, want)| image.iter().filter(|h| set.contains(h)).count() == *want)
    };
    let mut image = Vec::with_capacity(domain.len());
    let mut total = 0u128;
    enumerate(
        domain.len(),
        host.n(),
        &mut image,
        &mut |img, at, h| allowed[h] && pin[domain[at]].is_none_or(|p| p == h) && fits(img, at, h),
        &complete,
        &mut total,
    );
    Ok(BigUint::from(total))
}

fn enumerate(
    len: usize,
    n: usize,
    image: &mut Vec<usize>,
    accept: &mut dyn FnMut(&[usize], usize, usize) -> bool,
    complete: &dyn Fn(&[usize]) -> bool,
    total: &mut u128,
) {
    let at = image.len();
    if at == len {
        if complete(image) {
            *total += 1;
        }
        return;
    }
    for h in 0..n {
        if accept(image, at, h) {
            image.push(h);
            enumerate(len, n, image, accept, complete, total);
            image.pop();
        }
    }
}

/// Injective maps sending every pattern arc to a host arc.
pub fn oracle_count_directed(pattern: &Digraph, host: &Digraph) -> Result<BigUint, HarnessError> {
    let cost = enumeration_cost(pattern.n(), host.n());
    if cost > DEFAULT_BUDGET {
        return Err(HarnessError::Budget(cost));
    }
    let mut image = Vec::new();
    let mut total = 0u128;
    enumerate(
        pattern.n(),
        host.n(),
        &mut image,
        &mut |img, at, h| {
            !img.contains(&h)
                && (0..at).all(|u| {
                    (!pattern.has_arc(u, at) || host.has_arc(img[u], h)) && (!pattern.has_arc(at, u) || host.has_arc(h, img[u]))
                })
        },
        &|_| true,
        &mut total,
    );
    Ok(BigUint::from(total))
}
