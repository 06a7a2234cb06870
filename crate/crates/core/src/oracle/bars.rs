//! Bar state matrices by direct enumeration of single-row mosaics.

use num_bigint::BigUint;

use super::tile::{Side, Tile};
use crate::transfer::{Letter, StateMatrix};

/// Letter required on the right edge of the bar. The left edge is always `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RightState {
    A,
    B,
}

/// Counts suitably adjacent `k × 1` bars for every (bottom, top) state pair by
/// trying all `4^k` tile rows. Entry `(i, j)` is indexed by the packed bottom
/// and top words, where the leftmost tile holds the least significant letter.
pub fn bar_matrix_bruteforce(k: u32, right: RightState) -> StateMatrix {
    assert!(
        (1..=10).contains(&k),
        "bar enumeration is limited to 10 tiles"
    );
    let right = match right {
        RightState::A => Letter::A,
        RightState::B => Letter::B,
    };
    let size = 1usize << k;
    let mut counts = vec![0u64; size * size];
    let mut row = vec![Tile::T1; k as usize];
    for code in 0..(1u64 << (2 * k)) {
        for (t, slot) in row.iter_mut().enumerate() {
            *slot = Tile::ALL[((code >> (2 * t)) & 3) as usize];
        }
        if row[0].label(Side::Left) != Letter::A || row[k as usize - 1].label(Side::Right) != right
        {
            continue;
        }
        if row
            .windows(2)
            .any(|w| w[0].label(Side::Right) != w[1].label(Side::Left))
        {
            continue;
        }
        let (mut bottom, mut top) = (0usize, 0usize);
        for (t, tile) in row.iter().enumerate() {
            bottom |= (tile.label(Side::Bottom).bit() as usize) << t;
            top |= (tile.label(Side::Top).bit() as usize) << t;
        }
        counts[bottom * size + top] += 1;
    }
    let mut m = StateMatrix::zeros(k, k);
    for i in 0..size {
        for j in 0..size {
            m.set(i, j, BigUint::from(counts[i * size + j]));
        }
    }
    m
}
