use std::collections::HashMap;

use num_bigint::BigUint;

use crate::caps::Caps;
use crate::error::Result;
use crate::region::{Cell, RegionSpec};

/// Two edge-adjacent cells, stored with the smaller cell first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino(Cell, Cell);

impl Domino {
    pub fn new(a: Cell, b: Cell) -> Domino {
        assert!(a.is_adjacent(b), "domino cells must share an edge");
        if a <= b {
            Domino(a, b)
        } else {
            Domino(b, a)
        }
    }

    pub fn cells(&self) -> (Cell, Cell) {
        (self.0, self.1)
    }

    pub fn is_horizontal(&self) -> bool {
        self.0.row == self.1.row
    }
}

/// A perfect domino cover, dominoes kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    dominoes: Vec<Domino>,
}

impl Tiling {
    pub fn new(mut dominoes: Vec<Domino>) -> Tiling {
        dominoes.sort();
        Tiling { dominoes }
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    /// Whether the dominoes cover `spec`'s cells exactly once.
    pub fn is_tiling_of(&self, spec: &RegionSpec) -> bool {
        let g = spec.geometry();
        let mut seen = std::collections::BTreeSet::new();
        for d in &self.dominoes {
            let (a, b) = d.cells();
            if !g.contains(a) || !g.contains(b) || !seen.insert(a) || !seen.insert(b) {
                return false;
            }
        }
        seen.len() as u64 == g.square_count()
    }
}

type PairSink<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

struct Board {
    cells: Vec<Cell>,
    right: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Board {
    fn new(spec: &RegionSpec) -> Board {
        let cells: Vec<Cell> = spec.geometry().cells().collect();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let right = cells
            .iter()
            .map(|c| index.get(&c.right()).copied())
            .collect();
        let above = cells
            .iter()
            .map(|c| index.get(&c.above()).copied())
            .collect();
        Board {
            cells,
            right,
            above,
        }
    }

    /// Backtracking over the first uncovered cell: horizontal first, then
    /// vertical. Cells are ordered bottom row first, so the partner is always to
    /// the right or above.
    fn search(
        &self,
        covered: &mut [bool],
        from: usize,
        stack: &mut Vec<(usize, usize)>,
        out: &mut PairSink<'_>,
    ) {
        let Some(i) = (from..covered.len()).find(|&i| !covered[i]) else {
            out(stack);
            return;
        };
        covered[i] = true;
        for partner in [self.right[i], self.above[i]].into_iter().flatten() {
            if covered[partner] {
                continue;
            }
            covered[partner] = true;
            stack.push((i, partner));
            self.search(covered, i + 1, stack, out);
            stack.pop();
            covered[partner] = false;
        }
        covered[i] = false;
    }
}

/// Every domino tiling of the region, in search order.
pub fn enumerate_tilings(spec: &RegionSpec) -> Result<Vec<Tiling>> {
    Caps::from_env().check_oracle(spec.square_count())?;
    let board = Board::new(spec);
    let mut covered = vec![false; board.cells.len()];
    let mut tilings = Vec::new();
    board.search(&mut covered, 0, &mut Vec::new(), &mut |pairs| {
        let dominoes = pairs
            .iter()
            .map(|&(a, b)| Domino::new(board.cells[a], board.cells[b]))
            .collect();
        tilings.push(Tiling::new(dominoes));
    });
    Ok(tilings)
}

/// Number of domino tilings by exhaustive search, without storing them.
pub fn count_tilings(spec: &RegionSpec) -> Result<BigUint> {
    Caps::from_env().check_oracle(spec.square_count())?;
    let board = Board::new(spec);
    let mut covered = vec![false; board.cells.len()];
    let mut count = 0u64;
    board.search(&mut covered, 0, &mut Vec::new(), &mut |_| count += 1);
    Ok(BigUint::from(count))
}
