use crate::plane::{Dart, PlaneGraph};
use crate::EmbedError;

/// Which faces to split into triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceScope {
    /// Every face except the outer one.
    Inner,
    /// Every face; the outer face is then the triangle holding the old outer dart.
    All,
}

/// Adds chords until every face in scope is a triangle. Chords are recorded in `delta`.
/// A face is fanned from its smallest vertex when that is possible without creating a
/// parallel edge; otherwise ears are cut one at a time.
pub fn triangulate(g: &PlaneGraph, scope: FaceScope) -> Result<PlaneGraph, EmbedError> {
    if g.components().len() > 1 {
        return Err(EmbedError::Disconnected);
    }
    let mut rot: Vec<Vec<usize>> = g.rotations().to_vec();
    let mut delta: Vec<(usize, usize)> = g.delta().to_vec();
    let outer_dart = g.outer_darts().first().copied();
    if g.n() < 3 || outer_dart.is_none() {
        return Ok(g.clone());
    }
    let outer_dart = outer_dart.expect("checked above");

    loop {
        let current = g.with_rotation(rot.clone(), delta.clone(), vec![outer_dart]);
        let faces = current.faces();
        let outer_id = faces.face_of(outer_dart).expect("outer dart");
        let target = faces
            .faces
            .iter()
            .enumerate()
            .find(|&(id, f)| f.len() > 3 && (scope == FaceScope::All || id != outer_id));
        let Some((_, face)) = target else { break };
        let walk: Vec<usize> = face.iter().map(|d| d.0).collect();
        if !fan_face(&current, &walk, &mut rot, &mut delta) {
            cut_ear(&current, &walk, &mut rot, &mut delta)?;
        }
    }

    let mut out = g.with_rotation(rot, delta, vec![outer_dart]);
    if scope == FaceScope::All {
        let faces = out.faces();
        let id = faces.face_of(outer_dart).expect("outer dart");
        let dart: Dart = *faces.faces[id].iter().min().expect("nonempty");
        out = out.with_outer(vec![dart]);
    }
    out.validate()?;
    Ok(out)
}

/// Inserts `c` right after `pred_a` around `a`, and `a` right after `pred_c` around `c`.
fn add_chord(rot: &mut [Vec<usize>], a: usize, pred_a: usize, c: usize, pred_c: usize) {
    let pa = rot[a].iter().position(|&x| x == pred_a).expect("corner at a");
    rot[a].insert(pa + 1, c);
    let pc = rot[c].iter().position(|&x| x == pred_c).expect("corner at c");
    rot[c].insert(pc + 1, a);
}

fn fan_face(g: &PlaneGraph, walk: &[usize], rot: &mut [Vec<usize>], delta: &mut Vec<(usize, usize)>) -> bool {
    let len = walk.len();
    let mut sorted = walk.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != len {
        return false;
    }
    let start = (0..len).min_by_key(|&i| walk[i]).expect("nonempty face");
    let cyc: Vec<usize> = (0..len).map(|t| walk[(start + t) % len]).collect();
    let apex = cyc[0];
    if cyc[2..len - 1].iter().any(|&x| g.has_edge(apex, x)) {
        return false;
    }
    let last = cyc[len - 1];
    for j in 2..len - 1 {
        add_chord(rot, apex, last, cyc[j], cyc[j - 1]);
        delta.push((apex.min(cyc[j]), apex.max(cyc[j])));
    }
    true
}

fn cut_ear(
    g: &PlaneGraph,
    walk: &[usize],
    rot: &mut [Vec<usize>],
    delta: &mut Vec<(usize, usize)>,
) -> Result<(), EmbedError> {
    let len = walk.len();
    for i in 0..len {
        let (prev, a, mid, c) = (walk[(i + len - 1) % len], walk[i], walk[(i + 1) % len], walk[(i + 2) % len]);
        if a != c && !g.has_edge(a, c) {
            add_chord(rot, a, prev, c, mid);
            delta.push((a.min(c), a.max(c)));
            return Ok(());
        }
    }
    Err(EmbedError::BadRotation("face admits no chord".into()))
}
