//! Sum-products over walks in a transfer table.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::KernelError;

/// Square table indexed by a finite index set.
pub type Transfer = Vec<Vec<BigInt>>;

fn check(h: usize) -> Result<(), KernelError> {
    if h < 2 {
        Err(KernelError::WalkTooShort(h))
    } else {
        Ok(())
    }
}

fn step(row: &[BigInt], t: &Transfer) -> Vec<BigInt> {
    let size = t.len();
    let mut next = vec![BigInt::zero(); size];
    for (y, ry) in row.iter().enumerate() {
        if ry.is_zero() {
            continue;
        }
        for (x, slot) in next.iter_mut().enumerate() {
            if !t[y][x].is_zero() {
                *slot += ry * &t[y][x];
            }
        }
    }
    next
}

/// `Σ_{x_1..x_h} Π_{i<h} T[x_i][x_{i+1}]`, by pushing a row vector through `h − 1` steps.
pub fn ie_sum_product(t: &Transfer, h: usize) -> Result<BigInt, KernelError> {
    check(h)?;
    let mut row = vec![BigInt::from(1); t.len()];
    for _ in 1..h {
        row = step(&row, t);
    }
    Ok(row.into_iter().sum())
}

/// Closed-walk version: the product also includes `T[x_h][x_1]`.
pub fn ie_sum_product_wrap(t: &Transfer, h: usize) -> Result<BigInt, KernelError> {
    check(h)?;
    closed_walks(t, t, h)
}

/// `trace(step^{h−1} · close)`: walks of `h − 1` step transitions closed by one `close` transition.
pub fn closed_walks(step_t: &Transfer, close: &Transfer, h: usize) -> Result<BigInt, KernelError> {
    check(h.max(2))?;
    let size = step_t.len();
    let mut total = BigInt::zero();
    for start in 0..size {
        let mut row = vec![BigInt::zero(); size];
        row[start] = BigInt::from(1);
        for _ in 1..h {
            row = step(&row, step_t);
        }
        for (y, ry) in row.iter().enumerate() {
            if !ry.is_zero() {
                total += ry * &close[y][start];
            }
        }
    }
    Ok(total)
}
