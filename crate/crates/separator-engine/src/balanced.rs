use num_rational::BigRational;
use planar_core::{cycle_sides, fundamental_cycle, Cycle, PlaneGraph, SpanningTree};

use crate::weights::{ratio, WeightAssignment};
use crate::SeparatorError;

/// Connected, at least three vertices, and every face (outer included) is a triangle.
pub fn is_triangulated(g: &PlaneGraph) -> bool {
    g.n() >= 3 && g.components().len() == 1 && g.faces().faces.iter().all(|f| f.len() == 3)
}

/// Weights of the strict interior and the strict exterior of `c`.
pub fn strict_side_weights(
    g: &PlaneGraph,
    c: &Cycle,
    w: &WeightAssignment,
) -> Result<(BigRational, BigRational), SeparatorError> {
    let sides = cycle_sides(g, c)?;
    Ok((w.total(sides.strict_interior(c)), w.total(sides.strict_exterior(c))))
}

fn is_balanced(g: &PlaneGraph, c: &Cycle, w: &WeightAssignment) -> Result<bool, SeparatorError> {
    let bound = ratio(3, 4);
    let (inside, outside) = strict_side_weights(g, c, w)?;
    Ok(inside <= bound && outside <= bound)
}

/// First fundamental cycle of `tree` (nontree edges in edge order) whose strict sides
/// each weigh at most 3/4.
pub fn balanced_cycle_separator(
    g: &PlaneGraph,
    tree: &SpanningTree,
    w: &WeightAssignment,
) -> Result<Cycle, SeparatorError> {
    if !w.is_proper(&ratio(1, 4)) {
        return Err(SeparatorError::NotProper);
    }
    if !is_triangulated(g) {
        return Err(SeparatorError::NotTriangulated);
    }
    for (u, v) in g.edges() {
        if tree.contains_edge(u, v) {
            continue;
        }
        let c = fundamental_cycle(g, tree, (u, v))?;
        if is_balanced(g, &c, w)? {
            return Ok(c);
        }
    }
    Err(SeparatorError::NoBalancedCycle)
}

/// Cycle balanced for the uniform weights on `x`. Sets with fewer than four vertices
/// use a face triangle through one of them, which leaves at most two on either side.
pub fn balanced_for_set(g: &PlaneGraph, tree: &SpanningTree, x: &[usize]) -> Result<Cycle, SeparatorError> {
    if x.len() >= 4 {
        return balanced_cycle_separator(g, tree, &WeightAssignment::uniform(x)?);
    }
    if !is_triangulated(g) {
        return Err(SeparatorError::NotTriangulated);
    }
    let faces = g.faces();
    let id = (0..faces.len())
        .find(|&f| faces.vertices(f).iter().any(|v| x.contains(v)))
        .unwrap_or(0);
    let c = Cycle::new(g, faces.vertices(id))?;
    if !x.is_empty() && !is_balanced(g, &c, &WeightAssignment::uniform(x)?)? {
        return Err(SeparatorError::NoBalancedCycle);
    }
    Ok(c)
}
