use counting_kernel::{AnswerTable, Key, Subproblem};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use pattern_catalog::PatSet;
use planar_core::{bfs_layers, default_root, outerplanarity_index, peel_levels, PlaneGraph, VSet};

use crate::families::restricted;
use crate::plan::{Leaf, Plan};
use crate::ReductionError;

/// Source of the residue classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layering {
    /// BFS distance from a root.
    Breadth,
    /// Peeling depth, used when some BFS piece is not outerplanar enough.
    Peel,
}

/// Inclusion-exclusion over deleted residue classes `R ⊆ [k+1]`.
///
/// A map of at most `k` vertices misses some residue class, so the count on `G` is the
/// signed sum over nonempty `R` of counts on `G − V_R`. For `R = {z_1 < … < z_h}` the graph
/// `G − V_R` falls apart into the pieces strictly between consecutive residues (cyclically),
/// and pattern components are distributed over those pieces.
#[derive(Clone, Debug)]
pub struct LayerPlan {
    pub sub: Subproblem,
    pub modulus: usize,
    pub layering: Layering,
    /// Residue of each vertex of `sub`, in increasing vertex order.
    pub residues: Vec<usize>,
    /// Piece between residues `y` and `z` at `y * modulus + z`; `None` when empty.
    pieces: Vec<Option<Plan>>,
}

impl LayerPlan {
    pub fn pieces(&self) -> impl Iterator<Item = &Plan> {
        self.pieces.iter().flatten()
    }

    pub fn piece(&self, y: usize, z: usize) -> Option<&Plan> {
        self.pieces[y * self.modulus + z].as_ref()
    }

    pub(crate) fn map_pieces(self, f: &mut dyn FnMut(Leaf) -> Plan) -> LayerPlan {
        let LayerPlan { sub, modulus, layering, residues, pieces } = self;
        let pieces = pieces.into_iter().map(|p| p.map(|p| p.map_leaves(f))).collect();
        LayerPlan { sub, modulus, layering, residues, pieces }
    }

    pub(crate) fn eval(&self, solve: &dyn Fn(&Subproblem) -> AnswerTable) -> AnswerTable {
        let ctx = &self.sub.ctx;
        let comps = ctx.pattern().components(ctx.pattern().all());
        let masks = 1usize << comps.len();
        let union = |mask: usize| -> PatSet {
            comps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(PatSet::EMPTY, |acc, (_, c)| acc.union(*c))
        };
        let width = self.modulus;
        // value[y][z][mask]: maps of the union of the masked components into piece (y, z)
        let value: Vec<Vec<BigInt>> = (0..width * width)
            .map(|at| match &self.pieces[at] {
                None => (0..masks).map(|m| if m == 0 { BigInt::one() } else { BigInt::zero() }).collect(),
                Some(plan) => {
                    let table = plan.eval(solve);
                    (0..masks).map(|m| BigInt::from(table.class_total(&ctx.index, union(m), PatSet::EMPTY))).collect()
                }
            })
            .collect();
        let state = |mask: usize, y: usize| mask * width + y;
        let mut totals = vec![BigInt::zero(); masks];
        for first in 0..width {
            // every signed walk of increasing residues from (∅, first)
            let mut front = vec![BigInt::zero(); masks * width];
            front[state(0, first)] = BigInt::one();
            let mut reached = front.clone();
            while front.iter().any(|v| !v.is_zero()) {
                let mut next = vec![BigInt::zero(); masks * width];
                for mask in 0..masks {
                    for y in first..width {
                        let w = &front[state(mask, y)];
                        if w.is_zero() {
                            continue;
                        }
                        for z in y + 1..width {
                            let row = &value[y * width + z];
                            let free = (masks - 1) & !mask;
                            let mut add = free;
                            loop {
                                if !row[add].is_zero() {
                                    next[state(mask | add, z)] -= w * &row[add];
                                }
                                if add == 0 {
                                    break;
                                }
                                add = (add - 1) & free;
                            }
                        }
                    }
                }
                for (r, v) in reached.iter_mut().zip(&next) {
                    *r += v;
                }
                front = next;
            }
            for (target, total) in totals.iter_mut().enumerate() {
                for y in first..width {
                    let close = &value[y * width + first];
                    let mut mask = target;
                    loop {
                        let w = &reached[state(mask, y)];
                        if !w.is_zero() {
                            *total += w * &close[target & !mask];
                        }
                        if mask == 0 {
                            break;
                        }
                        mask = (mask - 1) & target;
                    }
                }
            }
        }
        let m = self.sub.monitors.len();
        let mut out = AnswerTable::new();
        for (target, total) in totals.into_iter().enumerate() {
            let x = union(target);
            let r = vec![x.len() as u8; m];
            // piece tables drop maps above the upper bounds, so only admitted sizes are exact
            if ctx.index.representative(x, PatSet::EMPTY) != x || !self.sub.monitors.admits(&r) {
                continue;
            }
            assert!(!total.is_negative(), "layer inclusion-exclusion went negative");
            let value: BigUint = total.to_biguint().expect("nonnegative");
            out.add(Key { r, sep: PatSet::EMPTY, x, f: Vec::new() }, value);
        }
        out
    }
}

fn piece_members(residues: &[usize], y: usize, z: usize) -> Vec<usize> {
    let inside = |r: usize| match y.cmp(&z) {
        std::cmp::Ordering::Less => y < r && r < z,
        std::cmp::Ordering::Equal => r != y,
        std::cmp::Ordering::Greater => r > y || r < z,
    };
    (0..residues.len()).filter(|&v| inside(residues[v])).collect()
}

fn certified(plane: &PlaneGraph, residues: &[usize], modulus: usize, k: usize) -> bool {
    (0..modulus).all(|y| {
        (0..modulus).all(|z| {
            let members = piece_members(residues, y, z);
            members.is_empty() || outerplanarity_index(&plane.induced(&members)) <= k
        })
    })
}

/// Layer decomposition of a subproblem with empty boundary whose monitors all contain the
/// whole vertex set. Every piece is certified `k`-outerplanar.
pub fn reduce_outerplanarity(sub: &Subproblem) -> Result<Plan, ReductionError> {
    if !sub.boundary.is_empty() {
        return Err(ReductionError::NotApplicable("boundary is not empty".into()));
    }
    if sub.monitors.iter().any(|m| !sub.verts.is_subset(&m.set)) {
        return Err(ReductionError::NotApplicable("a monitor does not cover the graph".into()));
    }
    let plane = sub.plane();
    if plane.n() == 0 {
        return Err(ReductionError::TooSmall(0));
    }
    let k = sub.k();
    let modulus = k + 1;
    let mut layering = Layering::Breadth;
    let mut residues = bfs_layers(&plane, default_root(&plane), modulus)?;
    if !certified(&plane, &residues, modulus, k) {
        layering = Layering::Peel;
        residues = peel_levels(&plane).into_iter().map(|l| (l - 1) % modulus).collect();
        if !certified(&plane, &residues, modulus, k) {
            return Err(ReductionError::NotApplicable("peel layering left a piece too deep".into()));
        }
    }
    let pieces = (0..modulus * modulus)
        .map(|at| {
            let members = piece_members(&residues, at / modulus, at % modulus);
            if members.is_empty() {
                return None;
            }
            let vs = VSet::from_iter_in(sub.universe(), members.iter().map(|&v| plane.name(v)));
            let boundary = VSet::empty(sub.universe());
            Some(Plan::leaf(sub.on(vs.clone(), boundary, restricted(&sub.monitors, &vs))))
        })
        .collect();
    Ok(Plan::Layers(Box::new(LayerPlan { sub: sub.clone(), modulus, layering, residues, pieces })))
}
