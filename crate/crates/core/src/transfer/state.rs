use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Edge letter of a mosaic tile: `A` when the edge is untouched by the
/// domino, `B` when the domino crosses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn bit(self) -> u64 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    pub fn from_bit(bit: u64) -> Letter {
        if bit & 1 == 0 {
            Letter::A
        } else {
            Letter::B
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

impl TryFrom<char> for Letter {
    type Error = Error;

    fn try_from(c: char) -> Result<Letter> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

/// Longest bar state representable in the packed encoding.
pub const MAX_STATE_LEN: u32 = 63;

/// A word over `{a, b}` read along the top or bottom edges of a bar, right to
/// left: the first letter belongs to the rightmost tile.
///
/// Packed with `a = 0`, `b = 1` and the first letter in the most significant
/// position, so lexicographic (ab-) order coincides with numeric order and
/// the 1-based ab-order index is `bits + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarState {
    len: u32,
    bits: u64,
}

impl BarState {
    /// The all-`a` word of length `len`.
    pub fn trivial(len: u32) -> BarState {
        assert!(len <= MAX_STATE_LEN);
        BarState { len, bits: 0 }
    }

    pub fn from_bits(bits: u64, len: u32) -> Result<BarState> {
        if len > MAX_STATE_LEN || (len < 64 && bits >> len != 0) {
            return Err(Error::IndexOutOfRange {
                index: bits.saturating_add(1),
                len,
            });
        }
        Ok(BarState { len, bits })
    }

    /// The `index`-th word of length `len` in ab-order, 1-based.
    pub fn from_index(index: u64, len: u32) -> Result<BarState> {
        if index == 0 {
            return Err(Error::IndexOutOfRange { index, len });
        }
        BarState::from_bits(index - 1, len).map_err(|_| Error::IndexOutOfRange { index, len })
    }

    pub fn from_letters(letters: &[Letter]) -> Result<BarState> {
        let len = letters.len() as u32;
        if len > MAX_STATE_LEN {
            return Err(Error::InvalidArgument(format!(
                "bar state longer than {MAX_STATE_LEN} letters"
            )));
        }
        let bits = letters.iter().fold(0u64, |acc, l| (acc << 1) | l.bit());
        Ok(BarState { len, bits })
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// 1-based position in ab-order.
    pub fn index(&self) -> u64 {
        self.bits + 1
    }

    pub fn is_trivial(&self) -> bool {
        self.bits == 0
    }

    /// Letter at word position `pos` (0 = first letter = rightmost tile).
    pub fn letter(&self, pos: u32) -> Letter {
        assert!(pos < self.len, "position {pos} out of range");
        Letter::from_bit(self.bits >> (self.len - 1 - pos))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len).map(|i| self.letter(i))
    }
}

/// ab-order index of a word.
pub fn state_index(word: &BarState) -> u64 {
    word.index()
}

/// Word of length `len` at ab-order position `index`.
pub fn state_word(index: u64, len: u32) -> Result<BarState> {
    BarState::from_index(index, len)
}

impl fmt::Display for BarState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BarState {
    type Err = Error;

    fn from_str(s: &str) -> Result<BarState> {
        let letters = s
            .chars()
            .map(Letter::try_from)
            .collect::<Result<Vec<_>>>()?;
        BarState::from_letters(&letters)
    }
}
