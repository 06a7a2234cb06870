//! Resource bounds for each counting route.
//!
//! Defaults can be overridden through environment variables, which is meant
//! for experiments on larger machines:
//!
//! | variable              | default | unit               |
//! |-----------------------|---------|--------------------|
//! | `AZTEC_DENSE_CAP`     | 12      | widest state length |
//! | `AZTEC_VECTOR_CAP`    | 26      | widest state length |
//! | `AZTEC_ORACLE_CAP`    | 40      | cells               |
//! | `AZTEC_MOSAIC_CAP`    | 16      | cells               |

use crate::error::{CapKind, Error, Result};

pub const DENSE_CAP: u32 = 12;
pub const VECTOR_CAP: u32 = 26;
pub const ORACLE_CAP: u64 = 40;
pub const MOSAIC_CAP: u64 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub dense: u32,
    pub vector: u32,
    pub oracle: u64,
    pub mosaic: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            dense: DENSE_CAP,
            vector: VECTOR_CAP,
            oracle: ORACLE_CAP,
            mosaic: MOSAIC_CAP,
        }
    }
}

impl Caps {
    /// Defaults, with any `AZTEC_*_CAP` variable that parses replacing its entry.
    pub fn from_env() -> Self {
        fn var<T: std::str::FromStr>(name: &str) -> Option<T> {
            std::env::var(name).ok()?.trim().parse().ok()
        }
        let d = Caps::default();
        Caps {
            dense: var("AZTEC_DENSE_CAP").unwrap_or(d.dense),
            vector: var("AZTEC_VECTOR_CAP").unwrap_or(d.vector),
            oracle: var("AZTEC_ORACLE_CAP").unwrap_or(d.oracle),
            mosaic: var("AZTEC_MOSAIC_CAP").unwrap_or(d.mosaic),
        }
    }

    pub(crate) fn check_dense(&self, state_len: u32) -> Result<()> {
        check(CapKind::Dense, state_len as u64, self.dense as u64)
    }

    pub(crate) fn check_vector(&self, state_len: u32) -> Result<()> {
        check(CapKind::Vector, state_len as u64, self.vector as u64)
    }

    pub(crate) fn check_oracle(&self, cells: u64) -> Result<()> {
        check(CapKind::Oracle, cells, self.oracle)
    }

    pub(crate) fn check_mosaic(&self, cells: u64) -> Result<()> {
        check(CapKind::Mosaic, cells, self.mosaic)
    }
}

fn check(kind: CapKind, requested: u64, limit: u64) -> Result<()> {
    if requested > limit {
        Err(Error::capacity(kind, requested, limit))
    } else {
        Ok(())
    }
}
