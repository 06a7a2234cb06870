//! Geometry of the expanded `(p, q)`-Aztec diamond of order `n`.
//!
//! The region is a stack of `2n + q` centered rows. Reading bottom to top the
//! lengths are `p+2, p+4, …, p+2n`, then `q` rows of `p+2n`, then
//! `p+2n, …, p+4, p+2`. With `n = 0` it degenerates to a `p × q` rectangle.
//! Widest rows occupy columns `1..=2n+p`; rows are numbered from 1 at the bottom.

use std::collections::BTreeSet;
use std::fmt;

/// Parameters of an expanded Aztec diamond: `p` extra columns, `q` extra
/// middle rows, order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionSpec {
    pub p: u32,
    pub q: u32,
    pub n: u32,
}

impl RegionSpec {
    pub const fn new(p: u32, q: u32, n: u32) -> Self {
        RegionSpec { p, q, n }
    }

    /// The classical Aztec diamond of order `n`.
    pub const fn aztec(n: u32) -> Self {
        RegionSpec::new(0, 0, n)
    }

    /// Length of the widest row, which is also the longest bar state the
    /// transfer product has to carry.
    pub fn widest(&self) -> u32 {
        if self.is_empty() {
            0
        } else {
            self.p + 2 * self.n
        }
    }

    pub fn is_empty(&self) -> bool {
        self.square_count() == 0
    }

    /// `2n(n+p+q+1) + pq`.
    pub fn square_count(&self) -> u64 {
        let (p, q, n) = (self.p as u64, self.q as u64, self.n as u64);
        2 * n * (n + p + q + 1) + p * q
    }

    /// True when the region has an odd number of squares, so no tiling exists.
    pub fn has_odd_area(&self) -> bool {
        self.p % 2 == 1 && self.q % 2 == 1
    }

    /// Row lengths from bottom to top. Empty for the empty region.
    pub fn row_lengths(&self) -> Vec<u32> {
        let RegionSpec { p, q, n } = *self;
        if n == 0 {
            return if p == 0 {
                Vec::new()
            } else {
                vec![p; q as usize]
            };
        }
        let lower = (1..=n).map(|k| p + 2 * k);
        let central = std::iter::repeat_n(p + 2 * n, q as usize);
        let upper = (1..=n).rev().map(|k| p + 2 * k);
        lower.chain(central).chain(upper).collect()
    }

    pub fn geometry(&self) -> RegionGeometry {
        RegionGeometry::new(*self)
    }
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AD({},{};{})", self.p, self.q, self.n)
    }
}

/// A unit square of the region. Ordered bottom row first, then left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(col: i32, row: i32) -> Self {
        Cell { row, col }
    }

    pub fn left(self) -> Cell {
        Cell::new(self.col - 1, self.row)
    }

    pub fn right(self) -> Cell {
        Cell::new(self.col + 1, self.row)
    }

    pub fn below(self) -> Cell {
        Cell::new(self.col, self.row - 1)
    }

    pub fn above(self) -> Cell {
        Cell::new(self.col, self.row + 1)
    }

    /// Whether the two cells share a unit edge.
    pub fn is_adjacent(self, other: Cell) -> bool {
        (self.col - other.col).abs() + (self.row - other.row).abs() == 1
    }
}

/// Explicit coordinates of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionGeometry {
    pub spec: RegionSpec,
    pub row_lengths: Vec<u32>,
    cells: BTreeSet<Cell>,
}

impl RegionGeometry {
    pub fn new(spec: RegionSpec) -> Self {
        let row_lengths = spec.row_lengths();
        let width = spec.widest() as i32;
        let mut cells = BTreeSet::new();
        for (j, &len) in row_lengths.iter().enumerate() {
            let inset = (width - len as i32) / 2;
            for c in 1..=len as i32 {
                cells.insert(Cell::new(inset + c, j as i32 + 1));
            }
        }
        RegionGeometry {
            spec,
            row_lengths,
            cells,
        }
    }

    pub fn square_count(&self) -> u64 {
        self.cells.len() as u64
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells in bottom-to-top, left-to-right order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn row_lengths_examples() {
        assert_eq!(
            RegionSpec::new(3, 2, 4).row_lengths(),
            vec![5, 7, 9, 11, 11, 11, 11, 9, 7, 5]
        );
        assert_eq!(RegionSpec::new(0, 0, 1).row_lengths(), vec![2, 2]);
        assert_eq!(RegionSpec::new(2, 3, 0).row_lengths(), vec![2, 2, 2]);
        assert!(RegionSpec::new(0, 0, 0).row_lengths().is_empty());
        assert!(RegionSpec::new(0, 5, 0).row_lengths().is_empty());
        assert!(RegionSpec::new(4, 0, 0).row_lengths().is_empty());
    }

    #[test]
    fn square_count_examples() {
        assert_eq!(RegionSpec::new(3, 2, 4).square_count(), 86);
        assert_eq!(RegionSpec::new(0, 0, 1).square_count(), 4);
        assert_eq!(RegionSpec::new(1, 1, 1).square_count(), 9);
        assert_eq!(RegionSpec::new(0, 0, 0).square_count(), 0);
    }

    #[test]
    fn cells_of_small_regions() {
        let g = RegionSpec::new(0, 0, 1).geometry();
        let expected: BTreeSet<_> = [(1, 1), (2, 1), (1, 2), (2, 2)]
            .into_iter()
            .map(|(c, r)| Cell::new(c, r))
            .collect();
        assert_eq!(g.cell_set(), &expected);

        let g = RegionSpec::new(2, 3, 0).geometry();
        assert_eq!(g.square_count(), 6);
        assert!(g
            .cells()
            .all(|c| (1..=2).contains(&c.col) && (1..=3).contains(&c.row)));

        let g = RegionSpec::new(1, 0, 1).geometry();
        assert_eq!(g.row_lengths, vec![3, 3]);
        assert_eq!(g.square_count(), 6);
    }

    #[test]
    fn narrow_rows_are_inset() {
        let g = RegionSpec::new(1, 0, 2).geometry();
        let bottom: Vec<i32> = g.cells().filter(|c| c.row == 1).map(|c| c.col).collect();
        assert_eq!(bottom, vec![2, 3, 4]);
        let middle: Vec<i32> = g.cells().filter(|c| c.row == 2).map(|c| c.col).collect();
        assert_eq!(middle, vec![1, 2, 3, 4, 5]);
    }

    proptest! {
        #[test]
        fn row_lengths_shape(p in 0u32..=8, q in 0u32..=8, n in 1u32..=8) {
            let spec = RegionSpec::new(p, q, n);
            let rows = spec.row_lengths();
            prop_assert_eq!(rows.len() as u32, 2 * n + q);
            let rev: Vec<_> = rows.iter().rev().copied().collect();
            prop_assert_eq!(&rows, &rev);
            for w in rows.windows(2) {
                let d = w[0].abs_diff(w[1]);
                prop_assert!(d == 0 || d == 2);
            }
            let half = rows.len() / 2;
            prop_assert!(rows[..=half].windows(2).all(|w| w[0] <= w[1]));
            let max = 2 * n + p;
            prop_assert_eq!(*rows.iter().max().unwrap(), max);
            prop_assert_eq!(rows.iter().filter(|&&l| l == max).count() as u32, q + 2);
        }

        #[test]
        fn area_formula(p in 0u32..=8, q in 0u32..=8, n in 0u32..=8) {
            let spec = RegionSpec::new(p, q, n);
            let sum: u64 = spec.row_lengths().iter().map(|&l| l as u64).sum();
            prop_assert_eq!(sum, spec.square_count());
            prop_assert_eq!(spec.geometry().square_count(), spec.square_count());
            prop_assert_eq!(spec.square_count() % 2 == 1, (p * q) % 2 == 1);
        }

        #[test]
        fn region_is_mirror_symmetric(p in 0u32..=5, q in 0u32..=5, n in 0u32..=5) {
            let g = RegionSpec::new(p, q, n).geometry();
            let width = g.spec.widest() as i32;
            for c in g.cells() {
                prop_assert!(g.contains(Cell::new(width + 1 - c.col, c.row)));
            }
        }
    }
}
