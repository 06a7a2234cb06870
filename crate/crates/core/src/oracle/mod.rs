//! Ground truth for the transfer-matrix counter: exhaustive domino tiling
//! search, the four-tile mosaic encoding of tilings, and brute-force bar
//! mosaic counts.
//!
//! Nothing here touches the matrix recurrences.

pub mod bars;
mod mosaic;
mod tile;
mod tiling;

pub use mosaic::{
    count_mosaics_bruteforce, enumerate_domino_mosaics, is_domino_mosaic, mosaic_to_tiling,
    tiling_to_mosaic, Mosaic,
};
pub use tile::{Side, Tile};
pub use tiling::{count_tilings, enumerate_tilings, Domino, Tiling};
