//! Planarity test and embedding: Demoucron-Malgrange-Pertuiset on every biconnected
//! block, block rotations concatenated at cut vertices.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::graph::Graph;
use crate::plane::PlaneGraph;
use crate::EmbedError;

/// Embeds a simple graph in the plane, or reports that it is not planar.
pub fn embed(g: &Graph) -> Result<PlaneGraph, EmbedError> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return Err(EmbedError::NonPlanar);
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        for (v, piece) in embed_block(&block)? {
            rot[v].extend(piece);
        }
    }
    PlaneGraph::from_rotation(rot)
}

/// Edge sets of the biconnected blocks (bridges are one-edge blocks).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(st: &mut State, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for &w in st.g.neighbors(u) {
            if st.disc[w] == 0 {
                st.stack.push((u, w));
                dfs(st, w, Some(u));
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (u, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    st.blocks.push(block);
                }
            } else if Some(w) != parent && st.disc[w] < st.disc[u] {
                st.stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }
    let n = g.n();
    let mut st = State { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), blocks: Vec::new() };
    for v in 0..n {
        if st.disc[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.blocks
}

/// Rotation pieces for one biconnected block with at least two edges.
fn embed_block(edges: &[(usize, usize)]) -> Result<HashMap<usize, Vec<usize>>, EmbedError> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let index: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nb = verts.len();
    let mut adj = vec![Vec::new(); nb];
    for &(u, v) in edges {
        let (a, b) = (index[&u], index[&v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; nb];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        h_edges.insert((v.min(w), v.max(w)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges.len() < edges.len() {
        let fragments = fragments(&adj, &in_h, &h_edges);
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return Err(EmbedError::NonPlanar),
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_id) = chosen.expect("at least one fragment remains");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_id);
        let (a, b) = (path[0], path[path.len() - 1]);
        let i = face.iter().position(|&x| x == a).expect("attachment on face");
        let j = face.iter().position(|&x| x == b).expect("attachment on face");
        let len = face.len();
        let inner = &path[1..path.len() - 1];
        let mut first: Vec<usize> = (0..).map(|t| face[(i + t) % len]).take((j + len - i) % len + 1).collect();
        first.extend(inner.iter().rev());
        let mut second: Vec<usize> = (0..).map(|t| face[(j + t) % len]).take((i + len - j) % len + 1).collect();
        second.extend(inner.iter());
        faces.push(first);
        faces.push(second);
    }

    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); nb];
    for f in &faces {
        let len = f.len();
        for t in 0..len {
            let (u, v, w) = (f[(t + len - 1) % len], f[t], f[(t + 1) % len]);
            succ[v].insert(u, w);
        }
    }
    let mut out = HashMap::new();
    for v in 0..nb {
        let start = adj[v][0];
        let mut order = vec![verts[start]];
        let mut cur = succ[v][&start];
        while cur != start {
            order.push(verts[cur]);
            cur = succ[v][&cur];
            if order.len() > adj[v].len() {
                return Err(EmbedError::BadRotation("block faces do not close".into()));
            }
        }
        if order.len() != adj[v].len() {
            return Err(EmbedError::BadRotation("block rotation misses a neighbor".into()));
        }
        out.insert(verts[v], order);
    }
    Ok(out)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let nb = adj.len();
    let mut parent = vec![usize::MAX; nb];
    let mut depth = vec![usize::MAX; nb];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((u, idx)) = stack.pop() {
        if idx < adj[u].len() {
            stack.push((u, idx + 1));
            let w = adj[u][idx];
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if w != parent[u] && depth[w] < depth[u] {
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        }
    }
    unreachable!("a biconnected block with two or more edges has a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// Either a single edge between two embedded vertices, or a component of
    /// non-embedded vertices.
    body: FragmentBody,
}

enum FragmentBody {
    Edge(usize, usize),
    Component(Vec<usize>),
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let nb = adj.len();
    let mut out = Vec::new();
    for u in 0..nb {
        for &v in &adj[u] {
            if u < v && in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment { attachments: vec![u, v], body: FragmentBody::Edge(u, v) });
            }
        }
    }
    let mut seen = vec![false; nb];
    for s in 0..nb {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut att = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if in_h[w] {
                    att.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        comp.sort_unstable();
        out.push(Fragment { attachments: att, body: FragmentBody::Component(comp) });
    }
    out
}

/// A path through the fragment between two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    match &frag.body {
        FragmentBody::Edge(u, v) => vec![*u, *v],
        FragmentBody::Component(comp) => {
            let a = frag.attachments[0];
            let in_comp: HashSet<usize> = comp.iter().copied().collect();
            let mut prev: HashMap<usize, usize> = HashMap::new();
            let mut queue = VecDeque::new();
            for &x in &adj[a] {
                if in_comp.contains(&x) && !prev.contains_key(&x) {
                    prev.insert(x, a);
                    queue.push_back(x);
                }
            }
            while let Some(y) = queue.pop_front() {
                if let Some(&b) = adj[y].iter().find(|&&b| in_h[b] && b != a) {
                    let mut path = vec![b, y];
                    let mut cur = y;
                    while let Some(&p) = prev.get(&cur) {
                        path.push(p);
                        if p == a {
                            break;
                        }
                        cur = p;
                    }
                    path.reverse();
                    return path;
                }
                for &w in &adj[y] {
                    if in_comp.contains(&w) && !prev.contains_key(&w) {
                        prev.insert(w, y);
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragments of a biconnected block have two attachments")
        }
    }
}
