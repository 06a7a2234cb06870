use std::time::Instant;

use rayon::prelude::*;

use super::record::{Outcome, OutputRecord};
use crate::counter::{count, Method};
use crate::error::Result;
use crate::region::RegionSpec;

fn timed(spec: &RegionSpec, method: Method) -> (Result<crate::BigCount>, u64) {
    let start = Instant::now();
    let result = count(spec, method);
    (result, start.elapsed().as_millis() as u64)
}

/// Counts one region. Errors (capacity or otherwise) are returned, not recorded.
pub fn compute(spec: RegionSpec, method: Method) -> Result<OutputRecord> {
    let (result, elapsed_ms) = timed(&spec, method);
    Ok(OutputRecord {
        p: spec.p,
        q: spec.q,
        n: spec.n,
        outcome: Outcome::Count(result?),
        method,
        elapsed_ms,
    })
}

/// Every `(p, q, n)` up to the given maxima, in lexicographic order. Cells run
/// concurrently; a failing cell is recorded in its row and the sweep goes on.
pub fn sweep(p_max: u32, q_max: u32, n_max: u32, method: Method) -> Vec<OutputRecord> {
    let specs: Vec<RegionSpec> = (0..=p_max)
        .flat_map(|p| {
            (0..=q_max).flat_map(move |q| (0..=n_max).map(move |n| RegionSpec::new(p, q, n)))
        })
        .collect();
    specs
        .par_iter()
        .map(|spec| {
            let (result, elapsed_ms) = timed(spec, method);
            OutputRecord {
                p: spec.p,
                q: spec.q,
                n: spec.n,
                outcome: match result {
                    Ok(c) => Outcome::Count(c),
                    Err(e) => Outcome::Error(e.to_string()),
                },
                method,
                elapsed_ms,
            }
        })
        .collect()
}
