use planar_core::{Cycle, PlaneGraph};

use crate::SeparatorError;

/// The two cycles of `c ∪ path` through `path`, for a path joining two vertices of `c`
/// whose inner vertices avoid `c`. The first continues along `c` forward from the end of
/// the path, the second backward.
pub fn split_cycle(g: &PlaneGraph, c: &Cycle, path: &[usize]) -> Result<(Cycle, Cycle), SeparatorError> {
    let bad = |why: &str| SeparatorError::BadParameters(format!("cannot split cycle: {why}"));
    if path.len() < 2 {
        return Err(bad("path too short"));
    }
    let pos = |v: usize| c.vertices().iter().position(|&w| w == v);
    let (Some(ia), Some(ib)) = (pos(path[0]), pos(path[path.len() - 1])) else {
        return Err(bad("path ends off the cycle"));
    };
    if path[1..path.len() - 1].iter().any(|&v| c.contains(v)) {
        return Err(bad("path touches the cycle"));
    }
    let len = c.len();
    let walk = |forward: bool| -> Vec<usize> {
        let mut out = path.to_vec();
        let mut i = ib;
        loop {
            i = if forward { (i + 1) % len } else { (i + len - 1) % len };
            if i == ia {
                break;
            }
            out.push(c.vertices()[i]);
        }
        out
    };
    Ok((Cycle::new(g, walk(true))?, Cycle::new(g, walk(false))?))
}
