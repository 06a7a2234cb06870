//! Tiling counts of expanded Aztec diamonds.
//!
//! The count is the `(1,1)` entry of the product of one bar matrix per row:
//! `L_{p+2}, …, L_{p+2n}`, then `q` copies of `C_{p+2n}`, then
//! `U_{p+2n}, …, U_{p+2}`. [`count_dense`] forms that product literally;
//! [`count_vector`] carries only its first row and applies each factor through
//! the block recurrences without building it.

mod closed_form;
mod dense;
mod plan;
mod vector;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle;
use crate::region::RegionSpec;

pub use closed_form::{aztec_closed_form, binomial, delannoy_closed_form};
pub use dense::{count_dense, factor_sequence, partial_products, StateProduct};
pub use plan::{factor_plan, Factor};
pub use vector::{apply_factor, count_vector};

/// An exact tiling count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == BigUint::ZERO
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidArgument(format!(
                "not a decimal count: {s:?}"
            )));
        }
        BigUint::from_str(s)
            .map(BigCount)
            .map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

/// How a count is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Dense,
    Vector,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Dense, Method::Vector, Method::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Dense => "dense",
            Method::Vector => "vector",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Method::Dense),
            "vector" => Ok(Method::Vector),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// Counts tilings of `spec` with the chosen method.
pub fn count(spec: &RegionSpec, method: Method) -> Result<BigCount> {
    match method {
        Method::Dense => count_dense(spec),
        Method::Vector => count_vector(spec),
        Method::Oracle => oracle::count_tilings(spec).map(BigCount),
    }
}

/// The region has an odd number of squares, so its count must come out zero.
pub fn vanishes_by_parity(spec: &RegionSpec) -> bool {
    spec.has_odd_area()
}
