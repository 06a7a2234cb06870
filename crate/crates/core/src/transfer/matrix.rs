use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Dense matrix of nonnegative big integers whose rows and columns are
/// indexed by bar states.
///
/// `row_state_len` / `col_state_len` record the length of the states that
/// index the rows and columns, so `rows == 2^row_state_len`.
#[derive(Clone, PartialEq, Eq)]
pub struct StateMatrix {
    rows: usize,
    cols: usize,
    row_state_len: u32,
    col_state_len: u32,
    entries: Vec<BigUint>,
}

impl StateMatrix {
    pub fn zeros(row_state_len: u32, col_state_len: u32) -> Self {
        let rows = 1usize << row_state_len;
        let cols = 1usize << col_state_len;
        StateMatrix {
            rows,
            cols,
            row_state_len,
            col_state_len,
            entries: vec![BigUint::zero(); rows * cols],
        }
    }

    pub fn identity(state_len: u32) -> Self {
        let mut m = StateMatrix::zeros(state_len, state_len);
        for i in 0..m.rows {
            m.set(i, i, BigUint::one());
        }
        m
    }

    /// Builds a matrix from small integer rows; the row and column counts must
    /// be powers of two.
    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            r.is_power_of_two() && c.is_power_of_two(),
            "dimensions must be powers of two"
        );
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = StateMatrix::zeros(r.trailing_zeros(), c.trailing_zeros());
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigUint::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_state_len(&self) -> u32 {
        self.row_state_len
    }

    pub fn col_state_len(&self) -> u32 {
        self.col_state_len
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigUint) {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigUint> {
        self.entries.iter()
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero() || e.is_one())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> StateMatrix {
        let mut t = StateMatrix::zeros(self.col_state_len, self.row_state_len);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    t.set(j, i, e.clone());
                }
            }
        }
        t
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub(crate) fn place(&mut self, r0: usize, c0: usize, block: &StateMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.entries[dst..dst + block.cols].clone_from_slice(block.row(i));
        }
    }

    /// `[[self, 0], [0, 0]]`, doubling both state lengths' index ranges.
    pub fn pad(&self) -> StateMatrix {
        let mut m = StateMatrix::zeros(self.row_state_len + 1, self.col_state_len + 1);
        m.place(0, 0, self);
        m
    }

    /// Rows whose index satisfies `keep`, in order. The result must still have a
    /// power-of-two row count.
    pub fn select_rows(&self, keep: impl Fn(usize) -> bool) -> StateMatrix {
        let picked: Vec<usize> = (0..self.rows).filter(|&i| keep(i)).collect();
        assert!(
            picked.len().is_power_of_two(),
            "selection must keep 2^k rows"
        );
        let mut m = StateMatrix::zeros(picked.len().trailing_zeros(), self.col_state_len);
        for (dst, &src) in picked.iter().enumerate() {
            let start = dst * m.cols;
            m.entries[start..start + m.cols].clone_from_slice(self.row(src));
        }
        m
    }

    /// Matrix product. Zero entries on either side are skipped, which keeps
    /// products with sparse 0/1 bar matrices cheap.
    pub fn mul(&self, rhs: &StateMatrix) -> StateMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let support: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|s| {
                (0..rhs.cols)
                    .filter(|&j| !rhs.get(s, j).is_zero())
                    .collect()
            })
            .collect();
        let mut out = StateMatrix::zeros(self.row_state_len, rhs.col_state_len);
        for i in 0..self.rows {
            let dst = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
            for (s, lhs) in self.row(i).iter().enumerate() {
                if lhs.is_zero() {
                    continue;
                }
                for &j in &support[s] {
                    let r = rhs.get(s, j);
                    if r.is_one() {
                        dst[j] += lhs;
                    } else {
                        dst[j] += lhs * r;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[BigUint]) -> Vec<BigUint> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigUint::zero(); self.cols];
        for (s, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, e) in self.row(s).iter().enumerate() {
                if !e.is_zero() {
                    out[j] += x * e;
                }
            }
        }
        out
    }

    /// Small-integer view, for tests and display. Panics on entries above `u64`.
    pub fn to_u64_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| u64::try_from(e).expect("entry exceeds u64"))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for StateMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "StateMatrix {}x{} (states {}→{})",
            self.rows, self.cols, self.row_state_len, self.col_state_len
        )?;
        if self.rows * self.cols <= 1024 {
            for i in 0..self.rows {
                let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
                writeln!(f, "  [{}]", row.join(" "))?;
            }
        }
        Ok(())
    }
}
