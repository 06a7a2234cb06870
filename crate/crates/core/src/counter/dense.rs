use std::collections::hash_map::{Entry, HashMap};

use num_bigint::BigUint;

use super::plan::{factor_plan, Factor};
use super::BigCount;
use crate::caps::Caps;
use crate::error::Result;
use crate::region::RegionSpec;
use crate::transfer::{central_c, lower_l, upper_u, StateMatrix};

/// `N_m`: the product of the first `m` row factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateProduct {
    pub matrix: StateMatrix,
    pub rows_consumed: usize,
}

fn check_plan(plan: &[Factor]) -> Result<()> {
    let widest = plan.iter().map(|f| f.bar_len()).max().unwrap_or(0);
    Caps::from_env().check_dense(widest)
}

fn materialize(factor: Factor) -> Result<StateMatrix> {
    match factor {
        Factor::Lower(m) => lower_l(m),
        Factor::Central(m) => central_c(m),
        Factor::Upper(m) => upper_u(m),
    }
}

/// The bar matrices of every row, bottom to top.
pub fn factor_sequence(spec: &RegionSpec) -> Result<Vec<StateMatrix>> {
    let plan = factor_plan(spec);
    check_plan(&plan)?;
    plan.into_iter().map(materialize).collect()
}

/// Runs the product left to right, calling `visit` with each `N_m`. Repeated
/// factors are built once.
fn fold_products(
    spec: &RegionSpec,
    mut visit: impl FnMut(&StateMatrix, usize),
) -> Result<Option<StateMatrix>> {
    let plan = factor_plan(spec);
    check_plan(&plan)?;
    let mut built: HashMap<Factor, StateMatrix> = HashMap::new();
    let mut acc: Option<StateMatrix> = None;
    for (m, factor) in plan.into_iter().enumerate() {
        let f = match built.entry(factor) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(materialize(factor)?),
        };
        let next = match &acc {
            None => f.clone(),
            Some(n) => n.mul(f),
        };
        visit(&next, m + 1);
        acc = Some(next);
    }
    Ok(acc)
}

/// `N_1, …, N_{2n+q}`.
pub fn partial_products(spec: &RegionSpec) -> Result<Vec<StateProduct>> {
    let mut out = Vec::new();
    fold_products(spec, |matrix, rows_consumed| {
        out.push(StateProduct {
            matrix: matrix.clone(),
            rows_consumed,
        })
    })?;
    Ok(out)
}

/// The `(1,1)` entry of the full product of materialized bar matrices. An
/// empty product is the identity, so empty regions count 1.
pub fn count_dense(spec: &RegionSpec) -> Result<BigCount> {
    let product = fold_products(spec, |_, _| {})?;
    Ok(BigCount(match product {
        Some(n) => n.get(0, 0).clone(),
        None => BigUint::from(1u32),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(p: u32, q: u32, n: u32) -> BigCount {
        count_dense(&RegionSpec::new(p, q, n)).unwrap()
    }

    #[test]
    fn factor_sequences() {
        let f = factor_sequence(&RegionSpec::new(0, 0, 1)).unwrap();
        assert_eq!(f[0].to_u64_rows(), vec![vec![1, 0, 0, 1]]);
        assert_eq!(f[1].to_u64_rows(), vec![vec![1], vec![0], vec![0], vec![1]]);

        let f = factor_sequence(&RegionSpec::new(2, 2, 0)).unwrap();
        assert_eq!(f, vec![central_c(2).unwrap(), central_c(2).unwrap()]);

        let f = factor_sequence(&RegionSpec::new(1, 0, 1)).unwrap();
        assert_eq!(f, vec![lower_l(3).unwrap(), upper_u(3).unwrap()]);
    }

    #[test]
    fn partial_products_small() {
        let n = partial_products(&RegionSpec::new(0, 0, 1)).unwrap();
        assert_eq!(n.len(), 2);
        assert_eq!(n[0].matrix.to_u64_rows(), vec![vec![1, 0, 0, 1]]);
        assert_eq!(n[1].matrix.to_u64_rows(), vec![vec![2]]);
        assert_eq!(n[1].rows_consumed, 2);

        let n = partial_products(&RegionSpec::new(1, 0, 1)).unwrap();
        let last = &n[1].matrix;
        assert_eq!((last.rows(), last.cols()), (2, 2));
        assert_eq!(last.get(0, 0), &BigUint::from(3u32));

        let n = partial_products(&RegionSpec::new(2, 1, 0)).unwrap();
        assert_eq!(n[0].matrix, central_c(2).unwrap());
    }

    #[test]
    fn product_shapes() {
        for spec in [
            RegionSpec::new(3, 2, 2),
            RegionSpec::new(0, 3, 2),
            RegionSpec::new(2, 0, 3),
        ] {
            let plan = factor_plan(&spec);
            let prods = partial_products(&spec).unwrap();
            for (f, n) in plan.iter().zip(&prods) {
                assert_eq!(n.matrix.row_state_len(), spec.p);
                assert_eq!(n.matrix.col_state_len(), f.output_len());
            }
            let last = &prods.last().unwrap().matrix;
            assert_eq!((last.rows(), last.cols()), (1 << spec.p, 1 << spec.p));
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(dense(0, 0, 1), 2);
        assert_eq!(dense(1, 0, 1), 3);
        assert_eq!(dense(1, 1, 1), 0);
        assert_eq!(dense(2, 2, 0), 2);
        assert_eq!(dense(0, 0, 0), 1);
        assert_eq!(dense(7, 0, 0), 1);
    }

    #[test]
    fn dense_cap() {
        assert!(count_dense(&RegionSpec::new(0, 0, 7))
            .unwrap_err()
            .is_capacity());
        assert!(count_dense(&RegionSpec::new(13, 2, 0))
            .unwrap_err()
            .is_capacity());
        assert!(factor_sequence(&RegionSpec::new(1, 0, 6))
            .unwrap_err()
            .is_capacity());
    }
}
