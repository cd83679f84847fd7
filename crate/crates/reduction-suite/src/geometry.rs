use std::collections::HashMap;

use counting_kernel::Subproblem;
use planar_core::{cycle_sides, triangulate, Cycle, FaceScope, PlaneGraph, SpanningTree, VSet};
use separator_engine::{balanced_for_set, Alignment};

use crate::ReductionError;

/// Which strict side of a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Interior,
    Exterior,
}

/// Strict sides of a cycle as global vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub interior: VSet,
    pub exterior: VSet,
}

impl Sides {
    pub fn get(&self, side: Side) -> &VSet {
        match side {
            Side::Interior => &self.interior,
            Side::Exterior => &self.exterior,
        }
    }
}

/// Fully triangulated embedding of a connected subproblem graph. Local ids are named by
/// global host ids; chords added by the triangulation never appear in the subproblem.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub tri: PlaneGraph,
    universe: usize,
}

impl Geometry {
    pub fn new(sub: &Subproblem) -> Result<Self, ReductionError> {
        let plane = sub.plane();
        if plane.n() < 3 {
            return Err(ReductionError::TooSmall(plane.n()));
        }
        if plane.components().len() > 1 {
            return Err(ReductionError::Disconnected);
        }
        Ok(Geometry { tri: triangulate(&plane, FaceScope::All)?, universe: sub.universe() })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn global(&self, v: usize) -> usize {
        self.tri.name(v)
    }

    pub fn local(&self, g: usize) -> Option<usize> {
        self.tri.local(g)
    }

    pub fn vset(&self, locals: impl IntoIterator<Item = usize>) -> VSet {
        VSet::from_iter_in(self.universe, locals.into_iter().map(|v| self.global(v)))
    }

    pub fn globals(&self, c: &Cycle) -> Vec<usize> {
        c.vertices().iter().map(|&v| self.global(v)).collect()
    }

    pub fn cycle(&self, globals: &[usize]) -> Result<Cycle, ReductionError> {
        let locals = globals
            .iter()
            .map(|&g| self.local(g).ok_or(ReductionError::NotApplicable(format!("vertex {g} is not in the subproblem"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cycle::new(&self.tri, locals)?)
    }

    /// Cycle balanced for the vertices of `x` (global).
    pub fn balanced_cycle(&self, x: &VSet) -> Result<Cycle, ReductionError> {
        let locals: Vec<usize> = x.iter().filter_map(|g| self.local(g)).collect();
        let tree = SpanningTree::bfs(&self.tri, 0);
        Ok(balanced_for_set(&self.tri, &tree, &locals)?)
    }

    pub fn sides(&self, c: &Cycle) -> Result<Sides, ReductionError> {
        let sides = cycle_sides(&self.tri, c)?;
        Ok(Sides {
            interior: self.vset(sides.strict_interior(c)),
            exterior: self.vset(sides.strict_exterior(c)),
        })
    }

    /// The cycle together with one strict side, embedded as a disk bounded by the cycle.
    ///
    /// At a cycle vertex only the rotation sector between its two cycle neighbours that
    /// faces the chosen side is kept; the orientation is the one whose sectors stay inside
    /// the kept vertices and agree at both ends of every edge.
    pub fn side_graph(&self, c: &Cycle, side: Side) -> Result<SideGraph, ReductionError> {
        let strict: Vec<usize> = self.sides(c)?.get(side).iter().filter_map(|g| self.local(g)).collect();
        let mut keep: Vec<usize> = strict.iter().copied().chain(c.vertices().iter().copied()).collect();
        keep.sort_unstable();
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let len = c.len();
        let position: HashMap<usize, usize> = c.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let sector = |v: usize, from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![from];
            let mut cur = from;
            while cur != to {
                cur = self.tri.succ(v, cur);
                out.push(cur);
            }
            out
        };
        for forward in [true, false] {
            let rot: Option<Vec<Vec<usize>>> = keep
                .iter()
                .map(|&v| {
                    let around: Vec<usize> = match position.get(&v) {
                        Some(&i) => {
                            let prev = c.vertices()[(i + len - 1) % len];
                            let next = c.vertices()[(i + 1) % len];
                            if forward { sector(v, prev, next) } else { sector(v, next, prev) }
                        }
                        None => self.tri.rotation(v).to_vec(),
                    };
                    around.iter().map(|w| index.get(w).copied()).collect::<Option<Vec<usize>>>()
                })
                .collect();
            let Some(rot) = rot else { continue };
            let symmetric = rot.iter().enumerate().all(|(a, list)| list.iter().all(|&b| rot[b].contains(&a)));
            if !symmetric {
                continue;
            }
            let Ok(plane) = PlaneGraph::from_rotation(rot) else { continue };
            let cycle = Cycle::new(&plane, c.vertices().iter().map(|v| index[v]).collect())?;
            return Ok(SideGraph { plane, cycle, to_tri: keep });
        }
        Err(ReductionError::NotApplicable("no consistent side embedding".into()))
    }
}

/// One side of a cycle as its own plane graph. Ids past `to_tri.len()` (apexes added by
/// the duality) have no counterpart in the triangulation.
#[derive(Clone, Debug)]
pub struct SideGraph {
    pub plane: PlaneGraph,
    pub cycle: Cycle,
    to_tri: Vec<usize>,
}

impl SideGraph {
    pub fn tri_id(&self, v: usize) -> Option<usize> {
        self.to_tri.get(v).copied()
    }

    pub fn tri_path(&self, path: &[usize]) -> Vec<usize> {
        path.iter().filter_map(|&v| self.tri_id(v)).collect()
    }

    /// The alignment with the same cuts on this graph's copy of the cycle.
    pub fn aligned(&self, a: &Alignment) -> Result<Alignment, ReductionError> {
        Ok(Alignment::new(self.cycle.clone(), a.cuts())?)
    }
}
