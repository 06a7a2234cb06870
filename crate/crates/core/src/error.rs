use thiserror::Error;

/// Which resource bound a request ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    /// Materialized state matrices (state length of the widest row).
    Dense,
    /// Matrix-free vector propagation (state length of the widest row).
    Vector,
    /// Exhaustive tiling enumeration (number of cells).
    Oracle,
    /// Brute-force mosaic search (number of cells).
    Mosaic,
}

impl std::fmt::Display for CapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CapKind::Dense => "dense",
            CapKind::Vector => "vector",
            CapKind::Oracle => "oracle",
            CapKind::Mosaic => "mosaic",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{kind} capacity exceeded: requested {requested}, limit {limit}")]
    Capacity {
        kind: CapKind,
        requested: u64,
        limit: u64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("state index {index} out of range for length {len}")]
    IndexOutOfRange { index: u64, len: u32 },
    #[error("invalid bar state letter {0:?}")]
    InvalidLetter(char),
}

impl Error {
    pub fn capacity(kind: CapKind, requested: u64, limit: u64) -> Self {
        Error::Capacity {
            kind,
            requested,
            limit,
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
