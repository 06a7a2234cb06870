use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use super::tile::{Side, Tile};
use super::tiling::{Domino, Tiling};
use crate::caps::Caps;
use crate::error::Result;
use crate::region::{Cell, RegionGeometry, RegionSpec};
use crate::transfer::Letter;

/// Tiles placed on the cells of a region.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mosaic {
    pub placement: BTreeMap<Cell, Tile>,
}

fn neighbour(cell: Cell, side: Side) -> Cell {
    match side {
        Side::Left => cell.left(),
        Side::Right => cell.right(),
        Side::Top => cell.above(),
        Side::Bottom => cell.below(),
    }
}

/// Horizontal dominoes become `T4 T1`, vertical ones `T2` under `T3`.
pub fn tiling_to_mosaic(tiling: &Tiling) -> Mosaic {
    let mut placement = BTreeMap::new();
    for d in tiling.dominoes() {
        let (lo, hi) = d.cells();
        if d.is_horizontal() {
            placement.insert(lo, Tile::T4);
            placement.insert(hi, Tile::T1);
        } else {
            placement.insert(lo, Tile::T2);
            placement.insert(hi, Tile::T3);
        }
    }
    Mosaic { placement }
}

/// Inverse of [`tiling_to_mosaic`]: pairs each cell with the neighbour across
/// its `b` edge. Returns `None` if that neighbour is missing.
pub fn mosaic_to_tiling(mosaic: &Mosaic) -> Option<Tiling> {
    let mut dominoes = Vec::new();
    for (&cell, &tile) in &mosaic.placement {
        let other = neighbour(cell, tile.b_side());
        mosaic.placement.get(&other)?;
        if cell < other {
            dominoes.push(Domino::new(cell, other));
        }
    }
    Some(Tiling::new(dominoes))
}

/// Adjacency rule plus the all-`a` boundary requirement.
pub fn is_domino_mosaic(mosaic: &Mosaic) -> bool {
    mosaic.placement.iter().all(|(&cell, &tile)| {
        Side::ALL.iter().all(|&side| {
            let mine = tile.label(side);
            match mosaic.placement.get(&neighbour(cell, side)) {
                Some(other) => other.label(side.opposite()) == mine,
                None => mine == Letter::A,
            }
        })
    })
}

struct Search<'a> {
    cells: Vec<Cell>,
    index: HashMap<Cell, usize>,
    geometry: &'a RegionGeometry,
}

impl Search<'_> {
    /// Places tiles in cell order, checking each new tile against its left and
    /// lower neighbours (or the boundary) and, when it has no right or upper
    /// neighbour, against the boundary on those sides too.
    fn run(&self, at: usize, tiles: &mut Vec<Tile>, found: &mut dyn FnMut(&[Tile])) {
        if at == self.cells.len() {
            found(tiles);
            return;
        }
        let cell = self.cells[at];
        for tile in Tile::ALL {
            let fits = [Side::Left, Side::Bottom].iter().all(|&side| {
                let n = neighbour(cell, side);
                match self.index.get(&n) {
                    Some(&j) => tiles[j].label(side.opposite()) == tile.label(side),
                    None => tile.label(side) == Letter::A,
                }
            }) && [Side::Right, Side::Top].iter().all(|&side| {
                self.geometry.contains(neighbour(cell, side)) || tile.label(side) == Letter::A
            });
            if fits {
                tiles.push(tile);
                self.run(at + 1, tiles, found);
                tiles.pop();
            }
        }
    }
}

fn search_mosaics(spec: &RegionSpec, found: &mut dyn FnMut(&[Cell], &[Tile])) -> Result<()> {
    Caps::from_env().check_mosaic(spec.square_count())?;
    let geometry = spec.geometry();
    let cells: Vec<Cell> = geometry.cells().collect();
    let index = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let search = Search {
        cells,
        index,
        geometry: &geometry,
    };
    search.run(0, &mut Vec::new(), &mut |tiles| found(&search.cells, tiles));
    Ok(())
}

/// Every domino mosaic on the region, by tile-by-tile search.
pub fn enumerate_domino_mosaics(spec: &RegionSpec) -> Result<Vec<Mosaic>> {
    let mut out = Vec::new();
    search_mosaics(spec, &mut |cells, tiles| {
        out.push(Mosaic {
            placement: cells.iter().copied().zip(tiles.iter().copied()).collect(),
        });
    })?;
    Ok(out)
}

/// Number of domino mosaics on the region.
pub fn count_mosaics_bruteforce(spec: &RegionSpec) -> Result<BigUint> {
    let mut count = 0u64;
    search_mosaics(spec, &mut |_, _| count += 1)?;
    Ok(BigUint::from(count))
}
