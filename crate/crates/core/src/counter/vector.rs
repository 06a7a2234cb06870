//! Row-vector propagation through the bar matrices without materializing them.
//!
//! Every bar matrix used here satisfies a 2×2 block recurrence
//! `X_k = [[Y_{k-1}, X_{k-1}], [X_{k-1}, 0]]`, `Y_k = [[X_{k-1}, 0], [0, 0]]`,
//! differing only in the seed. Splitting the input vector on its leading state
//! letter, `v·X_k = [v0·Y_{k-1} + v1·X_{k-1}, v0·X_{k-1}]` and
//! `v·Y_k = [v0·X_{k-1}, 0]`, so both products come out of two half-size
//! recursive calls.

use num_bigint::BigUint;
use num_traits::Zero;

use super::plan::{factor_plan, Factor};
use super::BigCount;
use crate::caps::Caps;
use crate::error::Result;
use crate::region::RegionSpec;

/// Below this many input entries the recursion stays on one thread.
const PARALLEL_MIN: usize = 1 << 14;

/// Which seeds terminate the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Seeds {
    /// `v·C_k`: bottom at `k = 0` with `(X, Y) = ([1], [0])`.
    Full,
    /// `v·A_k` over the restricted family: bottom at `k = 1` with
    /// `(X, Y) = ([0 1], [1 0])`.
    RestrictedRows,
    /// `A_k·w` over the restricted family, i.e. `w` against the transposed
    /// seeds `([0 1]ᵗ, [1 0]ᵗ)`.
    RestrictedCols,
}

impl Seeds {
    fn base_k(self) -> u32 {
        match self {
            Seeds::Full => 0,
            Seeds::RestrictedRows | Seeds::RestrictedCols => 1,
        }
    }

    fn out_len(self, k: u32) -> usize {
        match self {
            Seeds::Full | Seeds::RestrictedRows => 1 << k,
            Seeds::RestrictedCols => 1 << (k - 1),
        }
    }

    /// Writes `v·X` into `x` and, if requested, `v·Y` into `y`, at the base size.
    fn base(self, v: &[BigUint], x: &mut [BigUint], y: Option<&mut [BigUint]>) {
        match self {
            Seeds::Full => {
                x[0] = v[0].clone();
                if let Some(y) = y {
                    y[0] = BigUint::zero();
                }
            }
            Seeds::RestrictedRows => {
                x[0] = BigUint::zero();
                x[1] = v[0].clone();
                if let Some(y) = y {
                    y[0] = v[0].clone();
                    y[1] = BigUint::zero();
                }
            }
            Seeds::RestrictedCols => {
                x[0] = v[1].clone();
                if let Some(y) = y {
                    y[0] = v[0].clone();
                }
            }
        }
    }
}

fn clear(buf: &mut [BigUint]) {
    buf.iter_mut().for_each(|e| e.set_zero());
}

/// `x = v·X_k`, and `y = v·Y_k` when `y` is given. Output buffers are fully
/// overwritten.
fn apply_pair(seeds: Seeds, k: u32, v: &[BigUint], x: &mut [BigUint], y: Option<&mut [BigUint]>) {
    debug_assert_eq!(x.len(), seeds.out_len(k));
    if v.iter().all(Zero::is_zero) {
        clear(x);
        if let Some(y) = y {
            clear(y);
        }
        return;
    }
    if k == seeds.base_k() {
        seeds.base(v, x, y);
        return;
    }
    let half = seeds.out_len(k - 1);
    let (v0, v1) = v.split_at(v.len() / 2);
    let mut x1 = vec![BigUint::zero(); half];
    {
        // x = [ v0·Y + v1·X | v0·X ]
        let (x_top, x_bottom) = x.split_at_mut(half);
        if v.len() >= PARALLEL_MIN {
            rayon::join(
                || apply_pair(seeds, k - 1, v0, x_bottom, Some(x_top)),
                || apply_pair(seeds, k - 1, v1, &mut x1, None),
            );
        } else {
            apply_pair(seeds, k - 1, v0, x_bottom, Some(x_top));
            apply_pair(seeds, k - 1, v1, &mut x1, None);
        }
    }
    if let Some(y) = y {
        let (y_top, y_bottom) = y.split_at_mut(half);
        y_top.clone_from_slice(&x[half..]);
        clear(y_bottom);
    }
    for (dst, add) in x[..half].iter_mut().zip(&x1) {
        if !add.is_zero() {
            *dst += add;
        }
    }
}

/// `v · factor`, where `v` has one entry per input state of the factor.
pub fn apply_factor(factor: Factor, v: &[BigUint]) -> Vec<BigUint> {
    assert_eq!(
        v.len(),
        1 << factor.input_len(),
        "vector length does not match factor"
    );
    let mut out = vec![BigUint::zero(); 1 << factor.output_len()];
    match factor {
        Factor::Central(m) => apply_pair(Seeds::Full, m, v, &mut out, None),
        Factor::Lower(m) => {
            // L_m = [Y_{m-1} | X_{m-1}]
            let half = out.len() / 2;
            let (left, right) = out.split_at_mut(half);
            apply_pair(Seeds::RestrictedRows, m - 1, v, right, Some(left));
        }
        Factor::Upper(m) => {
            // v·L_mᵗ = Y_{m-1}·v0 + X_{m-1}·v1
            let (v0, v1) = v.split_at(v.len() / 2);
            let mut y = vec![BigUint::zero(); out.len()];
            let mut scratch = vec![BigUint::zero(); out.len()];
            apply_pair(Seeds::RestrictedCols, m - 1, v0, &mut scratch, Some(&mut y));
            apply_pair(Seeds::RestrictedCols, m - 1, v1, &mut out, None);
            for (dst, add) in out.iter_mut().zip(&y) {
                *dst += add;
            }
        }
    }
    out
}

/// Tiling count by propagating the first row of the state product.
pub fn count_vector(spec: &RegionSpec) -> Result<BigCount> {
    let plan = factor_plan(spec);
    let widest = plan.iter().map(|f| f.bar_len()).max().unwrap_or(0);
    Caps::from_env().check_vector(widest)?;
    let Some(first) = plan.first() else {
        return Ok(BigCount(BigUint::from(1u32)));
    };
    let mut row = vec![BigUint::zero(); 1 << first.input_len()];
    row[0] = BigUint::from(1u32);
    for factor in plan {
        row = apply_factor(factor, &row);
    }
    Ok(BigCount(row.swap_remove(0)))
}
