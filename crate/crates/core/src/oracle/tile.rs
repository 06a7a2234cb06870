use crate::transfer::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    Top,
    Bottom,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Right, Side::Top, Side::Bottom];

    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

/// A unit square carrying half a domino. The single `b` edge is the one the
/// domino crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    /// Right half of a horizontal domino.
    T1,
    /// Bottom half of a vertical domino.
    T2,
    /// Top half of a vertical domino.
    T3,
    /// Left half of a horizontal domino.
    T4,
}

impl Tile {
    pub const ALL: [Tile; 4] = [Tile::T1, Tile::T2, Tile::T3, Tile::T4];

    pub fn b_side(self) -> Side {
        match self {
            Tile::T1 => Side::Left,
            Tile::T2 => Side::Top,
            Tile::T3 => Side::Bottom,
            Tile::T4 => Side::Right,
        }
    }

    pub fn label(self, side: Side) -> Letter {
        if side == self.b_side() {
            Letter::B
        } else {
            Letter::A
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_one_b_edge() {
        for t in Tile::ALL {
            let bs = Side::ALL
                .iter()
                .filter(|&&s| t.label(s) == Letter::B)
                .count();
            assert_eq!(bs, 1, "{t:?}");
        }
    }

    #[test]
    fn domino_halves_meet_on_b() {
        assert_eq!(Tile::T4.label(Side::Right), Letter::B);
        assert_eq!(Tile::T1.label(Side::Left), Letter::B);
        assert_eq!(Tile::T2.label(Side::Top), Letter::B);
        assert_eq!(Tile::T3.label(Side::Bottom), Letter::B);
    }
}
