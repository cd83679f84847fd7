use counting_kernel::{join, AnswerTable, Subproblem};
use num_traits::Zero;
use planar_core::VSet;

use crate::families::restricted;
use crate::plan::{Leaf, Plan};
use crate::ReductionError;

/// A ring `Z` and the closed region `Q ⊇ Z` it bounds (global ids).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedCycle {
    pub ring: VSet,
    pub region: VSet,
}

/// Signed chain over nested rings.
///
/// Every map avoids the private part of some ring, because it has fewer vertices than there
/// are rings. Maps are sorted by the first ring whose private part they avoid; for ring `z`
/// the count is the split of `V \ Priv_z` along `Pub_z`, with the outer part required to hit
/// every earlier private part. That requirement is resolved by subtracting, for each earlier
/// ring, the same quantity one level down.
#[derive(Clone, Debug)]
pub struct ChainPlan {
    pub sub: Subproblem,
    pub cycles: Vec<NestedCycle>,
    public: Vec<VSet>,
    outer: Vec<Plan>,
    /// `rings[z][y]` for `y < z`.
    rings: Vec<Vec<Plan>>,
    inner: Vec<Plan>,
}

impl ChainPlan {
    pub fn pieces(&self) -> impl Iterator<Item = &Plan> {
        self.outer.iter().chain(self.rings.iter().flatten()).chain(&self.inner)
    }

    pub fn public(&self, z: usize) -> &VSet {
        &self.public[z]
    }

    pub(crate) fn map_pieces(self, f: &mut dyn FnMut(Leaf) -> Plan) -> ChainPlan {
        let ChainPlan { sub, cycles, public, outer, rings, inner } = self;
        ChainPlan {
            sub,
            cycles,
            public,
            outer: outer.into_iter().map(|p| p.map_leaves(f)).collect(),
            rings: rings.into_iter().map(|row| row.into_iter().map(|p| p.map_leaves(f)).collect()).collect(),
            inner: inner.into_iter().map(|p| p.map_leaves(f)).collect(),
        }
    }

    pub(crate) fn eval(&self, solve: &dyn Fn(&Subproblem) -> AnswerTable) -> AnswerTable {
        let sub = &self.sub;
        let relaxed = restricted(&sub.monitors, &sub.verts);
        let mut below: Vec<(AnswerTable, AnswerTable)> = Vec::new();
        let mut pos = AnswerTable::new();
        let mut neg = AnswerTable::new();
        for z in 0..self.cycles.len() {
            let target = sub.boundary.union(&self.public[z]);
            let mut hit = (self.outer[z].eval(solve), AnswerTable::new());
            for (y, (plus, minus)) in below.iter().enumerate() {
                let ring = self.rings[z][y].eval(solve);
                hit.0.merge(join(&sub.ctx, minus, &ring, &self.public[y], &target, &relaxed));
                hit.1.merge(join(&sub.ctx, plus, &ring, &self.public[y], &target, &relaxed));
            }
            let inner = self.inner[z].eval(solve);
            pos.merge(join(&sub.ctx, &hit.0, &inner, &self.public[z], &sub.boundary, &relaxed));
            neg.merge(join(&sub.ctx, &hit.1, &inner, &self.public[z], &sub.boundary, &relaxed));
            below.push(hit);
        }
        subtract(pos, &neg).filtered(|k| sub.monitors.admits(&k.r))
    }
}

fn subtract(mut pos: AnswerTable, neg: &AnswerTable) -> AnswerTable {
    for (key, v) in neg.iter() {
        let slot = pos.entries.get_mut(key).expect("subtracted entry is present");
        assert!(*slot >= *v, "signed chain went negative");
        *slot -= v;
    }
    pos.entries.retain(|_, v| !v.is_zero());
    pos
}

/// Builds the chain pieces after checking nesting and separation of the rings.
///
/// Needs more rings than `min(k, upp(V))`. Checked: `Z_z ⊆ Q_z`, `Q_{z+1} ⊆ Q_z`,
/// `Z_y ∩ Q_z ⊆ Z_z` for `y < z`, and no edge between `Q_z \ Z_z` and `V \ Q_z`.
pub fn reduce_nearly_disjoint_paths(sub: &Subproblem, cycles: Vec<NestedCycle>) -> Result<Plan, ReductionError> {
    let verts = &sub.verts;
    let bound = sub.k().min(sub.upp(verts));
    if cycles.len() <= bound {
        return Err(ReductionError::ChainRejected(format!("{} rings for maps of up to {bound} vertices", cycles.len())));
    }
    let cycles: Vec<NestedCycle> = cycles
        .into_iter()
        .map(|c| NestedCycle { ring: c.ring.intersection(verts), region: c.region.intersection(verts) })
        .collect();
    let reject = |why: String| Err(ReductionError::ChainRejected(why));
    for (z, c) in cycles.iter().enumerate() {
        if !c.ring.is_subset(&c.region) {
            return reject(format!("ring {z} leaves its region"));
        }
        if z > 0 && !c.region.is_subset(&cycles[z - 1].region) {
            return reject(format!("region {z} is not nested"));
        }
        for (y, earlier) in cycles[..z].iter().enumerate() {
            if !earlier.ring.intersection(&c.region).is_subset(&c.ring) {
                return reject(format!("ring {y} enters region {z}"));
            }
        }
        let strict = c.region.difference(&c.ring);
        let outside = verts.difference(&c.region);
        if strict.iter().any(|a| sub.host.graph.neighbors(a).iter().any(|&b| outside.contains(b))) {
            return reject(format!("ring {z} does not separate"));
        }
    }
    let n = sub.universe();
    let private: Vec<VSet> = (0..cycles.len())
        .map(|z| {
            let mut others = VSet::empty(n);
            for (y, c) in cycles.iter().enumerate() {
                if y != z {
                    others.union_with(&c.ring);
                }
            }
            cycles[z].ring.difference(&others)
        })
        .collect();
    let public: Vec<VSet> = cycles.iter().zip(&private).map(|(c, p)| c.ring.difference(p)).collect();
    let piece = |vs: VSet, extra: &VSet| {
        let boundary = sub.boundary.union(extra).intersection(&vs);
        Plan::leaf(sub.on(vs.clone(), boundary, restricted(&sub.monitors, &vs)))
    };
    let outer_set = |z: usize| verts.difference(&cycles[z].region).union(&cycles[z].ring).difference(&private[z]);
    let outer = (0..cycles.len()).map(|z| piece(outer_set(z), &public[z])).collect();
    let rings = (0..cycles.len())
        .map(|z| {
            (0..z)
                .map(|y| {
                    let vs = cycles[y].region.intersection(&outer_set(z)).difference(&private[y]);
                    piece(vs, &public[y].union(&public[z]))
                })
                .collect()
        })
        .collect();
    let inner = (0..cycles.len()).map(|z| piece(cycles[z].region.difference(&private[z]), &public[z])).collect();
    Ok(Plan::Chain(Box::new(ChainPlan { sub: sub.clone(), cycles, public, outer, rings, inner })))
}
