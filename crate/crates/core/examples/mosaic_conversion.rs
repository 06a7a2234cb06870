//! Converts every tiling of the order-2 Aztec diamond to its tile mosaic and
//! draws it, one tile name per cell, top row first.

use aztec_count::oracle::{enumerate_tilings, is_domino_mosaic, tiling_to_mosaic};
use aztec_count::{Cell, RegionSpec};

fn main() {
    let spec = RegionSpec::aztec(2);
    let width = spec.widest() as i32;
    let rows = spec.row_lengths().len() as i32;
    for (i, tiling) in enumerate_tilings(&spec).unwrap().iter().enumerate() {
        let mosaic = tiling_to_mosaic(tiling);
        println!(
            "tiling {} (valid mosaic: {})",
            i + 1,
            is_domino_mosaic(&mosaic)
        );
        for row in (1..=rows).rev() {
            let line: Vec<String> = (1..=width)
                .map(|col| match mosaic.placement.get(&Cell::new(col, row)) {
                    Some(t) => format!("{t:?}"),
                    None => "  ".into(),
                })
                .collect();
            println!("  {}", line.join(" "));
        }
    }
}
