use std::collections::{BTreeMap, BTreeSet, VecDeque};

use planar_core::Graph;

use crate::chain::SeparatorChain;
use crate::SeparatorError;

const INF: i64 = i64::MAX / 4;

/// Either `p` disjoint separators of size at most `2q`, or `q` paths whose interiors share
/// at most `4p` vertices each with the other paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MengerOutcome {
    DisjointSeparators(SeparatorChain),
    /// `paths` run from the duality source to its sink; `chain` holds their interiors, with
    /// endpoints chosen by the caller.
    NearlyDisjointPaths { paths: Vec<Vec<usize>>, chain: SeparatorChain },
}

struct Arc {
    to: usize,
    cap: i64,
    flow: i64,
    cost: i64,
}

/// Residual network with paired arcs (`i ^ 1` is the reverse of `i`).
struct Network {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { arcs: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cap: i64, cost: i64) {
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, flow: 0, cost });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, flow: 0, cost: -cost });
    }

    fn residual(&self, a: usize) -> i64 {
        self.arcs[a].cap - self.arcs[a].flow
    }

    fn push(&mut self, path: &[usize], amount: i64) {
        for &a in path {
            self.arcs[a].flow += amount;
            self.arcs[a ^ 1].flow -= amount;
        }
    }

    fn bottleneck(&self, path: &[usize]) -> i64 {
        path.iter().map(|&a| self.residual(a)).min().unwrap_or(0)
    }

    fn trace(&self, via: &[Option<usize>], sink: usize) -> Vec<usize> {
        let mut path = Vec::new();
        let mut node = sink;
        while let Some(a) = via[node] {
            path.push(a);
            node = self.arcs[a ^ 1].to;
        }
        path.reverse();
        path
    }

    fn bfs_path(&self, source: usize, sink: usize) -> Option<Vec<usize>> {
        let mut via = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let w = self.arcs[a].to;
                if !seen[w] && self.residual(a) > 0 {
                    seen[w] = true;
                    via[w] = Some(a);
                    queue.push_back(w);
                }
            }
        }
        seen[sink].then(|| self.trace(&via, sink))
    }

    /// Augments until no path remains or the flow exceeds `limit`; returns the flow value.
    fn max_flow(&mut self, source: usize, sink: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total <= limit {
            let Some(path) = self.bfs_path(source, sink) else { break };
            let amount = self.bottleneck(&path).min(limit + 1 - total);
            self.push(&path, amount);
            total += amount;
        }
        total
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let w = self.arcs[a].to;
                if !seen[w] && self.residual(a) > 0 {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Successive cheapest augmenting paths (Bellman-Ford) until `amount` units flow.
    fn min_cost_flow(&mut self, source: usize, sink: usize, amount: i64) -> i64 {
        let mut total = 0;
        while total < amount {
            let mut dist = vec![INF; self.adj.len()];
            let mut via = vec![None; self.adj.len()];
            dist[source] = 0;
            let mut changed = true;
            while changed {
                changed = false;
                for u in 0..self.adj.len() {
                    if dist[u] == INF {
                        continue;
                    }
                    for &a in &self.adj[u] {
                        let w = self.arcs[a].to;
                        if self.residual(a) > 0 && dist[u] + self.arcs[a].cost < dist[w] {
                            dist[w] = dist[u] + self.arcs[a].cost;
                            via[w] = Some(a);
                            changed = true;
                        }
                    }
                }
            }
            if dist[sink] == INF {
                break;
            }
            let path = self.trace(&via, sink);
            let push = self.bottleneck(&path).min(amount - total);
            self.push(&path, push);
            total += push;
        }
        total
    }
}

fn vin(v: usize) -> usize {
    2 * v
}

fn vout(v: usize) -> usize {
    2 * v + 1
}

/// Minimum `(side, t)` vertex cut closest to `side`, if its size is at most `limit`.
fn closest_min_cut(g: &Graph, side: &[bool], t: usize, limit: usize) -> Option<BTreeSet<usize>> {
    let n = g.n();
    let hub = 2 * n;
    let mut net = Network::new(2 * n + 1);
    for v in 0..n {
        let cap = if side[v] || v == t { INF } else { 1 };
        net.add(vin(v), vout(v), cap, 0);
        if side[v] {
            net.add(hub, vout(v), INF, 0);
        }
    }
    for (u, v) in g.edges() {
        net.add(vout(u), vin(v), INF, 0);
        net.add(vout(v), vin(u), INF, 0);
    }
    if net.max_flow(hub, vin(t), limit as i64) > limit as i64 {
        return None;
    }
    let seen = net.reachable(hub);
    Some((0..n).filter(|&v| seen[vin(v)] && !seen[vout(v)]).collect())
}

fn greedy_chain(g: &Graph, s: usize, t: usize, p: usize, q: usize) -> Vec<BTreeSet<usize>> {
    let mut side = vec![false; g.n()];
    side[s] = true;
    let mut sets = Vec::new();
    while sets.len() < p {
        let Some(cut) = closest_min_cut(g, &side, t, 2 * q) else { break };
        let mut queue: VecDeque<usize> = (0..g.n()).filter(|&v| side[v]).collect();
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !side[w] && !cut.contains(&w) {
                    side[w] = true;
                    queue.push_back(w);
                }
            }
        }
        for &v in &cut {
            side[v] = true;
        }
        sets.push(cut);
    }
    sets
}

/// `q` units of `(s,t)`-flow where each vertex carries one unit for free and more at unit
/// cost, decomposed into `q` simple paths.
fn cheap_paths(g: &Graph, s: usize, t: usize, q: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let q = q as i64;
    let mut net = Network::new(2 * n);
    for v in 0..n {
        if v == s || v == t {
            net.add(vin(v), vout(v), q, 0);
        } else {
            net.add(vin(v), vout(v), 1, 0);
            if q > 1 {
                net.add(vin(v), vout(v), q - 1, 1);
            }
        }
    }
    let mut edge_arcs = Vec::new();
    for (u, v) in g.edges() {
        edge_arcs.push((u, v, net.arcs.len()));
        net.add(vout(u), vin(v), q, 0);
        edge_arcs.push((v, u, net.arcs.len()));
        net.add(vout(v), vin(u), q, 0);
    }
    net.min_cost_flow(vout(s), vin(t), q);
    let mut flow: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for &(u, v, a) in &edge_arcs {
        if net.arcs[a].flow > 0 {
            *flow.entry((u, v)).or_default() += net.arcs[a].flow;
        }
    }
    let keys: Vec<(usize, usize)> = flow.keys().copied().collect();
    for (u, v) in keys {
        let back = flow.get(&(v, u)).copied().unwrap_or(0);
        let here = flow.get(&(u, v)).copied().unwrap_or(0);
        let common = back.min(here);
        if common > 0 {
            *flow.get_mut(&(u, v)).expect("present") -= common;
            *flow.get_mut(&(v, u)).expect("present") -= common;
        }
    }
    flow.retain(|_, f| *f > 0);
    let mut paths = Vec::new();
    while paths.len() < q as usize {
        let mut walk = vec![s];
        while *walk.last().expect("nonempty") != t {
            let u = *walk.last().expect("nonempty");
            let Some(&(_, w)) = flow.range((u, 0)..(u + 1, 0)).map(|(k, _)| k).next() else { break };
            let slot = flow.get_mut(&(u, w)).expect("present");
            *slot -= 1;
            if *slot == 0 {
                flow.remove(&(u, w));
            }
            if let Some(pos) = walk.iter().position(|&x| x == w) {
                walk.truncate(pos + 1);
            } else {
                walk.push(w);
            }
        }
        if *walk.last().expect("nonempty") != t {
            break;
        }
        paths.push(walk);
    }
    paths
}

fn interiors(paths: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    paths.iter().map(|p| p[1..p.len() - 1].iter().copied().collect()).collect()
}

/// Checks the declared bounds of an outcome; a separator outcome is also checked as a chain in `g`.
pub fn validate_outcome(g: &Graph, outcome: &MengerOutcome, p: usize, q: usize) -> Result<(), SeparatorError> {
    match outcome {
        MengerOutcome::DisjointSeparators(chain) => {
            if chain.len() != p {
                return Err(SeparatorError::ChainViolation(format!("{} separators, expected {p}", chain.len())));
            }
            if !chain.is_disjoint() {
                return Err(SeparatorError::ChainViolation("separators overlap".into()));
            }
            if let Some(s) = chain.sets.iter().find(|s| s.len() > 2 * q) {
                return Err(SeparatorError::ChainViolation(format!("separator of size {} exceeds {}", s.len(), 2 * q)));
            }
            chain.validate(g)
        }
        MengerOutcome::NearlyDisjointPaths { paths, chain } => {
            if paths.len() != q || chain.len() != q {
                return Err(SeparatorError::ChainViolation(format!("{} paths, expected {q}", paths.len())));
            }
            for path in paths {
                if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                    return Err(SeparatorError::ChainViolation("path uses a non-edge".into()));
                }
            }
            for i in 0..chain.len() {
                if chain.public(i).len() > 4 * p {
                    return Err(SeparatorError::ChainViolation(format!("path {i} has too many public vertices")));
                }
            }
            Ok(())
        }
    }
}

/// A chain of `p` disjoint `(s,t)`-separators of size at most `2q` (closest minimum cuts,
/// each found beyond the previous one), or else `q` cheapest `(s,t)`-paths.
pub fn menger_duality(g: &Graph, s: usize, t: usize, p: usize, q: usize) -> Result<MengerOutcome, SeparatorError> {
    if p == 0 || q == 0 {
        return Err(SeparatorError::BadParameters(format!("p = {p}, q = {q}")));
    }
    if s == t || s >= g.n() || t >= g.n() {
        return Err(SeparatorError::BadParameters(format!("endpoints {s}, {t}")));
    }
    let sets = greedy_chain(g, s, t, p, q);
    if sets.len() == p {
        let outcome = MengerOutcome::DisjointSeparators(SeparatorChain::new(s, t, sets));
        validate_outcome(g, &outcome, p, q)?;
        return Ok(outcome);
    }
    let paths = if g.has_edge(s, t) { vec![vec![s, t]; q] } else { cheap_paths(g, s, t, q) };
    if paths.len() < q {
        return Err(SeparatorError::NoOutcome(format!("only {} paths and {} separators", paths.len(), sets.len())));
    }
    let chain = SeparatorChain::new(s, t, interiors(&paths));
    let outcome = MengerOutcome::NearlyDisjointPaths { paths, chain };
    validate_outcome(g, &outcome, p, q).map_err(|e| SeparatorError::NoOutcome(e.to_string()))?;
    Ok(outcome)
}
