//! Bar state matrices built from their 2×2 block recurrences.
//!
//! Two families share the letter `A` in the literature; here they are kept
//! apart:
//!
//! * [`bar_a`] / [`bar_b`]: square `2^k × 2^k` matrices counting bars with
//!   right state `a` / `b` and left state `a`.
//! * [`restricted_a`]: the `2^(k-1) × 2^k` rows of [`bar_a`] whose bottom
//!   letter under the leftmost tile is `a`. These build [`lower_l`].

use super::matrix::StateMatrix;
use crate::caps::Caps;
use crate::error::{Error, Result};

fn check_cap(k: u32) -> Result<()> {
    Caps::from_env().check_dense(k)
}

fn seed(rows: &[Vec<u64>]) -> StateMatrix {
    StateMatrix::from_rows(rows)
}

/// `[[top_left, top_right], [bottom_left, 0]]` with all blocks the same shape.
fn assemble(
    top_left: &StateMatrix,
    top_right: &StateMatrix,
    bottom_left: &StateMatrix,
) -> StateMatrix {
    debug_assert_eq!(top_left.rows(), top_right.rows());
    debug_assert_eq!(top_left.cols(), bottom_left.cols());
    let mut m = StateMatrix::zeros(top_left.row_state_len() + 1, top_left.col_state_len() + 1);
    m.place(0, 0, top_left);
    m.place(0, top_left.cols(), top_right);
    m.place(top_left.rows(), 0, bottom_left);
    m
}

/// `(A_k, B_k)` for `k ≥ 1`.
pub fn bar_pair(k: u32) -> Result<(StateMatrix, StateMatrix)> {
    if k == 0 {
        return Err(Error::InvalidArgument("bar length must be positive".into()));
    }
    check_cap(k)?;
    let mut a = seed(&[vec![0, 1], vec![1, 0]]);
    let mut b = seed(&[vec![1, 0], vec![0, 0]]);
    for _ in 2..=k {
        let next_b = a.pad();
        a = assemble(&b, &a, &a);
        b = next_b;
    }
    Ok((a, b))
}

/// Bars of length `k` with both side states `a`.
pub fn bar_a(k: u32) -> Result<StateMatrix> {
    bar_pair(k).map(|(a, _)| a)
}

/// Bars of length `k` with left state `a` and right state `b`.
pub fn bar_b(k: u32) -> Result<StateMatrix> {
    bar_pair(k).map(|(_, b)| b)
}

/// Central bar matrix `C_k`, `k ≥ 0`, from the single merged recurrence.
pub fn central_c(k: u32) -> Result<StateMatrix> {
    check_cap(k)?;
    let c0 = StateMatrix::identity(0);
    if k == 0 {
        return Ok(c0);
    }
    let mut prev = c0;
    let mut cur = seed(&[vec![0, 1], vec![1, 0]]);
    for _ in 2..=k {
        let next = assemble(&prev.pad(), &cur, &cur);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// The `2^(k-1) × 2^k` family, `k ≥ 1`.
pub fn restricted_a(k: u32) -> Result<StateMatrix> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "restricted bar length must be positive".into(),
        ));
    }
    check_cap(k)?;
    let a1 = seed(&[vec![0, 1]]);
    if k == 1 {
        return Ok(a1);
    }
    let mut prev = a1;
    let mut cur = seed(&[vec![1, 0, 0, 1], vec![0, 1, 0, 0]]);
    for _ in 3..=k {
        let next = assemble(&prev.pad(), &cur, &cur);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Lower bar matrix `L_m = [pad(A_{m-2}) | A_{m-1}]` over the restricted
/// family, with `[1 0]` standing in for the padded block when `m = 2`.
/// Rows are indexed by the `m-2` interior bottom letters.
pub fn lower_l(m: u32) -> Result<StateMatrix> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "lower bar matrix needs length at least 2, got {m}"
        )));
    }
    check_cap(m)?;
    let right = restricted_a(m - 1)?;
    let left = if m == 2 {
        seed(&[vec![1, 0]])
    } else {
        restricted_a(m - 2)?.pad()
    };
    let mut l = StateMatrix::zeros(m - 2, m);
    l.place(0, 0, &left);
    l.place(0, left.cols(), &right);
    Ok(l)
}

/// Upper bar matrix, the transpose of [`lower_l`].
pub fn upper_u(m: u32) -> Result<StateMatrix> {
    lower_l(m).map(|l| l.transpose())
}
