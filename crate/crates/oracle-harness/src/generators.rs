use pattern_catalog::Pattern;
use planar_core::{embed, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HostKind {
    /// Maximal planar graph grown by splitting random faces.
    Triangulation,
    /// Grid with a random subset of cell diagonals.
    Grid,
    /// Polygon with random non-crossing chords.
    Outerplanar,
    /// Two-row grid with random rung and diagonal choices.
    Ladder,
    /// Spine edge with pages attached to both ends, consecutive pages sometimes joined.
    StackedBook,
}

impl HostKind {
    pub const ALL: [HostKind; 5] =
        [HostKind::Triangulation, HostKind::Grid, HostKind::Outerplanar, HostKind::Ladder, HostKind::StackedBook];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    Path,
    Cycle,
    Matching,
    IndependentSet,
    Triangles,
    /// Random connected planar pattern.
    RandomPlanar,
}

impl PatternKind {
    pub const ALL: [PatternKind; 6] = [
        PatternKind::Path,
        PatternKind::Cycle,
        PatternKind::Matching,
        PatternKind::IndependentSet,
        PatternKind::Triangles,
        PatternKind::RandomPlanar,
    ];
}

/// A reproducible (host, pattern) pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub host: HostKind,
    pub n: usize,
    pub k: usize,
    pub pattern: PatternKind,
    pub seed: u64,
}

impl InstanceSpec {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }

    pub fn host_graph(&self) -> Result<Graph, HarnessError> {
        let g = host(self.host, self.n, &mut self.rng(1));
        validate_host(&g)?;
        Ok(g)
    }

    pub fn pattern_graph(&self) -> Pattern {
        pattern(self.pattern, self.k, &mut self.rng(2))
    }
}

/// Planarity and simplicity.
pub fn validate_host(g: &Graph) -> Result<(), HarnessError> {
    let mut edges: Vec<_> = g.edges().collect();
    let total = edges.len();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != total || edges.iter().any(|&(a, b)| a == b) {
        return Err(HarnessError::Generator("host is not simple".into()));
    }
    embed(g).map_err(|e| HarnessError::Generator(format!("host is not planar: {e}")))?;
    Ok(())
}

pub fn host(kind: HostKind, n: usize, rng: &mut impl Rng) -> Graph {
    let edges = match kind {
        HostKind::Triangulation => triangulation(n, rng),
        HostKind::Grid => {
            let rows = (2..=4).rfind(|r| n >= 2 * r).unwrap_or(1);
            let cols = (n / rows).max(1);
            let mut edges = grid_edges(rows, cols);
            for r in 0..rows.saturating_sub(1) {
                for c in 0..cols.saturating_sub(1) {
                    if rng.gen_bool(0.3) {
                        edges.push((r * cols + c, (r + 1) * cols + c + 1));
                    }
                }
            }
            return Graph::from_edges(rows * cols, &edges).expect("grid edges are simple");
        }
        HostKind::Outerplanar => outerplanar(n, rng),
        HostKind::Ladder => {
            let cols = (n / 2).max(1);
            let mut edges = Vec::new();
            for c in 0..cols {
                if c == 0 || c + 1 == cols || rng.gen_bool(0.7) {
                    edges.push((c, cols + c));
                }
                if c + 1 < cols {
                    edges.extend([(c, c + 1), (cols + c, cols + c + 1)]);
                    if rng.gen_bool(0.3) {
                        edges.push((c, cols + c + 1));
                    }
                }
            }
            return Graph::from_edges(2 * cols, &edges).expect("ladder edges are simple");
        }
        HostKind::StackedBook => {
            let mut edges = if n >= 2 { vec![(0, 1)] } else { Vec::new() };
            for v in 2..n {
                edges.extend([(0, v), (1, v)]);
                if v > 2 && rng.gen_bool(0.5) {
                    edges.push((v - 1, v));
                }
            }
            edges
        }
    };
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

fn grid_edges(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    edges
}

fn triangulation(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n < 3 {
        return (1..n).map(|v| (v - 1, v)).collect();
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0usize, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let [a, b, c] = faces.swap_remove(rng.gen_range(0..faces.len()));
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    edges
}

/// Polygon `0..n` plus chords of a random triangulation of it, each kept with probability 1/2.
fn outerplanar(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n < 3 {
        return (1..n).map(|v| (v - 1, v)).collect();
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v.min((v + 1) % n), v.max((v + 1) % n))).collect();
    let mut stack = vec![(0usize, n - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let apex = rng.gen_range(lo + 1..hi);
        for (a, b) in [(lo, apex), (apex, hi)] {
            if b - a >= 2 && rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
        stack.extend([(lo, apex), (apex, hi)]);
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

pub fn pattern(kind: PatternKind, k: usize, rng: &mut impl Rng) -> Pattern {
    let path: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
    let edges: Vec<(usize, usize)> = match kind {
        PatternKind::Path => path,
        PatternKind::Cycle if k >= 3 => path.into_iter().chain([(0, k - 1)]).collect(),
        PatternKind::Cycle => path,
        PatternKind::Matching => (0..k / 2).map(|i| (2 * i, 2 * i + 1)).collect(),
        PatternKind::IndependentSet => Vec::new(),
        PatternKind::Triangles => (0..k / 3).flat_map(|i| [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2), (3 * i, 3 * i + 2)]).collect(),
        PatternKind::RandomPlanar => {
            let mut order: Vec<usize> = (0..k).collect();
            order.shuffle(rng);
            let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
            for _ in 0..k {
                let (a, b) = (rng.gen_range(0..k), rng.gen_range(0..k));
                if a != b {
                    edges.push((a.min(b), a.max(b)));
                }
            }
            let edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            let mut edges = edges;
            edges.sort_unstable();
            edges.dedup();
            // K5 is the only non-planar graph on at most five vertices; drop one edge of it.
            if k == 5 && edges.len() == 10 {
                edges.pop();
            }
            edges
        }
    };
    Pattern::from_edges(k, &edges).expect("generated pattern edges are simple")
}
