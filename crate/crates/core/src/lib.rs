//! Exact domino tiling counts for expanded Aztec diamonds.
//!
//! A domino tiling of the region is encoded as a mosaic of four labelled tiles,
//! each row of which is a bar mosaic. Bar matrices count how a row can sit on
//! top of the row below, and the tiling count is the `(1,1)` entry of the
//! product of one bar matrix per row.
//!
//! ```
//! use aztec_count::{count, Method, RegionSpec};
//!
//! let n = count(&RegionSpec::aztec(4), Method::Vector).unwrap();
//! assert_eq!(n.to_string(), "1024");
//! ```

pub mod caps;
pub mod cli;
pub mod counter;
pub mod error;
pub mod oracle;
pub mod region;
pub mod transfer;

pub use caps::Caps;
pub use counter::{count, count_dense, count_vector, BigCount, Method};
pub use error::{CapKind, Error, Result};
pub use region::{Cell, RegionGeometry, RegionSpec};
