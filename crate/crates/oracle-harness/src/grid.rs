use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::HarnessError;

/// Number of `k`-vertex independent sets of the `rows × cols` grid, row by row over the
/// independent masks of a row.
pub fn grid_independent_sets(rows: usize, cols: usize, k: usize) -> BigUint {
    if rows == 0 || cols == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let (rows, cols) = if cols > rows { (cols, rows) } else { (rows, cols) };
    let masks: Vec<u32> = (0u32..1 << cols).filter(|m| m & (m >> 1) == 0).collect();
    let weight = |m: u32| m.count_ones() as usize;
    // by_mask[i][j]: placements of j vertices so far with the last row equal to masks[i]
    let mut by_mask: Vec<Vec<BigUint>> = masks
        .iter()
        .map(|&m| {
            let mut v = vec![BigUint::zero(); k + 1];
            if weight(m) <= k {
                v[weight(m)] = BigUint::one();
            }
            v
        })
        .collect();
    for _ in 1..rows {
        let mut next = vec![vec![BigUint::zero(); k + 1]; masks.len()];
        for (i, &m) in masks.iter().enumerate() {
            for (j, &prev) in masks.iter().enumerate() {
                if m & prev != 0 {
                    continue;
                }
                for have in 0..=k {
                    let total = have + weight(m);
                    if total <= k && !by_mask[j][have].is_zero() {
                        next[i][total] += &by_mask[j][have];
                    }
                }
            }
        }
        by_mask = next;
    }
    by_mask.iter().map(|v| &v[k]).sum()
}

/// The same count by listing vertex subsets; limited to 36 cells.
pub fn grid_independent_sets_enumerated(rows: usize, cols: usize, k: usize) -> Result<BigUint, HarnessError> {
    let cells = rows * cols;
    if cells > 36 {
        return Err(HarnessError::Budget(cells as f64));
    }
    let adjacent = |a: usize, b: usize| {
        let (ra, ca, rb, cb) = (a / cols, a % cols, b / cols, b % cols);
        ra.abs_diff(rb) + ca.abs_diff(cb) == 1
    };
    fn pick(start: usize, cells: usize, left: usize, chosen: &mut Vec<usize>, adjacent: &dyn Fn(usize, usize) -> bool) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for c in start..cells {
            if chosen.iter().all(|&d| !adjacent(c, d)) {
                chosen.push(c);
                total += pick(c + 1, cells, left - 1, chosen, adjacent);
                chosen.pop();
            }
        }
        total
    }
    Ok(BigUint::from(pick(0, cells, k, &mut Vec::new(), &adjacent)))
}
