use std::collections::{HashMap, VecDeque};

use crate::graph::Graph;
use crate::EmbedError;

/// Directed edge `(tail, head)`.
pub type Dart = (usize, usize);

/// Faces of an embedding, each given by its darts in traversal order.
#[derive(Clone, Debug)]
pub struct Faces {
    pub faces: Vec<Vec<Dart>>,
    face_of: HashMap<Dart, usize>,
}

impl Faces {
    pub fn face_of(&self, dart: Dart) -> Option<usize> {
        self.face_of.get(&dart).copied()
    }

    pub fn vertices(&self, face: usize) -> Vec<usize> {
        self.faces[face].iter().map(|d| d.0).collect()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Planar graph with a rotation system.
///
/// Vertices are local ids `0..n`; `names` maps them to ids of the graph this one was
/// cut from (identity for a root graph). Face traversal follows
/// `next(u, v) = (v, succ_v(u))`.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    rot: Vec<Vec<usize>>,
    slot: HashMap<Dart, usize>,
    names: Vec<usize>,
    outer: Vec<Dart>,
    delta: Vec<(usize, usize)>,
    layer: Option<Vec<usize>>,
}

impl PlaneGraph {
    /// Builds from a rotation system, checks it, and picks the largest face of every
    /// component as its outer face.
    pub fn from_rotation(rot: Vec<Vec<usize>>) -> Result<Self, EmbedError> {
        let names = (0..rot.len()).collect();
        let mut pg = Self::unchecked(rot, names)?;
        pg.check_euler()?;
        pg.outer = pg.pick_outer_faces();
        Ok(pg)
    }

    fn unchecked(rot: Vec<Vec<usize>>, names: Vec<usize>) -> Result<Self, EmbedError> {
        let n = rot.len();
        let mut slot = HashMap::new();
        for (v, list) in rot.iter().enumerate() {
            for (i, &w) in list.iter().enumerate() {
                if w >= n || w == v {
                    return Err(EmbedError::BadRotation(format!("vertex {v} lists {w}")));
                }
                if slot.insert((v, w), i).is_some() {
                    return Err(EmbedError::BadRotation(format!("vertex {v} lists {w} twice")));
                }
            }
        }
        for &(v, w) in slot.keys() {
            if !slot.contains_key(&(w, v)) {
                return Err(EmbedError::BadRotation(format!("edge {v}-{w} is one-sided")));
            }
        }
        Ok(PlaneGraph { rot, slot, names, outer: Vec::new(), delta: Vec::new(), layer: None })
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn m(&self) -> usize {
        self.slot.len() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.slot.contains_key(&(u, v))
    }

    pub fn names(&self) -> &[usize] {
        &self.names
    }

    pub fn name(&self, v: usize) -> usize {
        self.names[v]
    }

    /// Local id of a name, if present (names are increasing).
    pub fn local(&self, name: usize) -> Option<usize> {
        self.names.binary_search(&name).ok()
    }

    /// Successor of `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let list = &self.rot[v];
        list[(self.slot[&(v, u)] + 1) % list.len()]
    }

    /// Predecessor of `u` in the rotation at `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let list = &self.rot[v];
        list[(self.slot[&(v, u)] + list.len() - 1) % list.len()]
    }

    pub fn next_dart(&self, dart: Dart) -> Dart {
        (dart.1, self.succ(dart.1, dart.0))
    }

    pub fn graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        Graph::from_edges(self.n(), &edges).expect("rotation system is simple")
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rot
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Edges added by triangulation, as local pairs `(u, v)` with `u < v`.
    pub fn delta(&self) -> &[(usize, usize)] {
        &self.delta
    }

    pub fn layers(&self) -> Option<&[usize]> {
        self.layer.as_deref()
    }

    /// One dart on the outer face of every component that has an edge.
    pub fn outer_darts(&self) -> &[Dart] {
        &self.outer
    }

    pub fn faces(&self) -> Faces {
        let mut face_of = HashMap::with_capacity(self.slot.len());
        let mut faces = Vec::new();
        let mut starts: Vec<Dart> = self.slot.keys().copied().collect();
        starts.sort_unstable();
        for start in starts {
            if face_of.contains_key(&start) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of.insert(d, id);
                walk.push(d);
                d = self.next_dart(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        Faces { faces, face_of }
    }

    /// Connected components (local ids), ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.rot[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of regions of the plane, treating components side by side.
    pub fn face_count(&self) -> usize {
        let comps = self.components();
        let isolated = comps.iter().filter(|c| c.len() == 1).count();
        let dart_faces = self.faces().len();
        (dart_faces + isolated + 1).saturating_sub(comps.len())
    }

    pub(crate) fn check_euler(&self) -> Result<(), EmbedError> {
        let faces = self.faces();
        let comps = self.components();
        let mut comp_of = vec![0; self.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in &faces.faces {
            face_count[comp_of[f[0].0]] += 1;
        }
        let mut edge_count = vec![0usize; comps.len()];
        for (u, _) in self.edges() {
            edge_count[comp_of[u]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let f = if c.len() == 1 { 1 } else { face_count[i] };
            if c.len() + f != edge_count[i] + 2 {
                return Err(EmbedError::EulerViolated {
                    vertices: c.len(),
                    edges: edge_count[i],
                    faces: f,
                });
            }
        }
        Ok(())
    }

    fn pick_outer_faces(&self) -> Vec<Dart> {
        let faces = self.faces();
        let comps = self.components();
        let mut comp_of = vec![0; self.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut best: Vec<Option<(usize, Dart)>> = vec![None; comps.len()];
        for f in &faces.faces {
            let c = comp_of[f[0].0];
            let min_dart = *f.iter().min().expect("faces are nonempty");
            let better = match best[c] {
                None => true,
                Some((len, d)) => f.len() > len || (f.len() == len && min_dart < d),
            };
            if better {
                best[c] = Some((f.len(), min_dart));
            }
        }
        best.into_iter().flatten().map(|(_, d)| d).collect()
    }

    /// Outer face dart of the component containing `v`, if that component has an edge.
    pub fn outer_dart_of(&self, v: usize) -> Option<Dart> {
        let comp = self.component_of(v);
        self.outer.iter().copied().find(|d| comp.binary_search(&d.0).is_ok())
    }

    fn component_of(&self, v: usize) -> Vec<usize> {
        self.components().into_iter().find(|c| c.binary_search(&v).is_ok()).unwrap_or_default()
    }

    /// Vertices on outer faces (all components; isolated vertices included).
    pub fn outer_vertices(&self) -> Vec<usize> {
        let faces = self.faces();
        let mut on = vec![false; self.n()];
        for &d in &self.outer {
            let id = faces.face_of(d).expect("outer dart exists");
            for &(u, _) in &faces.faces[id] {
                on[u] = true;
            }
        }
        for v in 0..self.n() {
            if self.rot[v].is_empty() {
                on[v] = true;
            }
        }
        (0..self.n()).filter(|&v| on[v]).collect()
    }

    /// Ids of outer faces in `faces` (one per component with an edge).
    pub fn outer_face_ids(&self, faces: &Faces) -> Vec<usize> {
        self.outer.iter().map(|&d| faces.face_of(d).expect("outer dart exists")).collect()
    }

    /// Sub-embedding induced by the local vertices `keep` (sorted). Outer faces are the
    /// faces that contain this embedding's outer region.
    pub fn induced(&self, keep: &[usize]) -> PlaneGraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let rot: Vec<Vec<usize>> = keep
            .iter()
            .map(|&v| self.rot[v].iter().filter(|&&w| local[w] != usize::MAX).map(|&w| local[w]).collect())
            .collect();
        let names = keep.iter().map(|&v| self.names[v]).collect();
        let mut sub = PlaneGraph::unchecked(rot, names).expect("restriction of a valid rotation");
        sub.delta = self
            .delta
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u].min(local[v]), local[u].max(local[v])))
            .collect();
        if let Some(layer) = &self.layer {
            sub.layer = Some(keep.iter().map(|&v| layer[v]).collect());
        }

        let parent_faces = self.faces();
        let sub_faces = sub.faces();
        let mut outer = Vec::new();
        for comp in sub.components() {
            if comp.len() == 1 {
                continue;
            }
            let in_comp = |pv: usize| local[pv] != usize::MAX && comp.binary_search(&local[pv]).is_ok();
            let Some(parent_outer) = self.outer_dart_of(keep[comp[0]]) else { continue };
            let pface = &parent_faces.faces[parent_faces.face_of(parent_outer).expect("outer dart")];
            let dart = match pface.iter().find(|&&(u, v)| in_comp(u) && in_comp(v)) {
                Some(&(u, v)) => (local[u], local[v]),
                None => self.outer_corner(pface, &in_comp, &local),
            };
            let id = sub_faces.face_of(dart).expect("dart of the sub-embedding");
            outer.push(*sub_faces.faces[id].iter().min().expect("nonempty face"));
        }
        outer.sort_unstable();
        sub.outer = outer;
        sub
    }

    /// BFS from the parent outer face through vertices outside the component; the first
    /// edge into the component fixes the corner holding the outer region.
    fn outer_corner(&self, pface: &[Dart], in_comp: &dyn Fn(usize) -> bool, local: &[usize]) -> Dart {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        for &(u, _) in pface {
            if !in_comp(u) && !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.rot[x] {
                if in_comp(y) {
                    let mut w = self.succ(y, x);
                    while !in_comp(w) {
                        w = self.succ(y, w);
                    }
                    return (local[y], local[w]);
                }
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        unreachable!("component is reachable from its parent outer face")
    }

    /// Rebuild with a modified rotation system (used by triangulation).
    pub(crate) fn with_rotation(&self, rot: Vec<Vec<usize>>, delta: Vec<(usize, usize)>, outer: Vec<Dart>) -> Self {
        let mut pg = PlaneGraph::unchecked(rot, self.names.clone()).expect("valid rotation");
        pg.delta = delta;
        pg.outer = outer;
        pg.layer = self.layer.clone();
        pg
    }

    pub(crate) fn with_outer(mut self, outer: Vec<Dart>) -> Self {
        self.outer = outer;
        self
    }

    pub(crate) fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn set_layers(&mut self, layer: Vec<usize>) {
        assert_eq!(layer.len(), self.n());
        self.layer = Some(layer);
    }

    /// Checks the rotation system against Euler's formula per component.
    pub fn validate(&self) -> Result<(), EmbedError> {
        self.check_euler()
    }

    /// Sum of face lengths (equals `2m` for every valid embedding).
    pub fn total_face_length(&self) -> usize {
        self.faces().faces.iter().map(Vec::len).sum()
    }

    /// Replace names (used when an embedding of a relabelled copy is produced).
    pub fn with_names(mut self, names: Vec<usize>) -> Self {
        assert_eq!(names.len(), self.n());
        assert!(names.windows(2).all(|w| w[0] < w[1]), "names must be increasing");
        self.names = names;
        self
    }
}
