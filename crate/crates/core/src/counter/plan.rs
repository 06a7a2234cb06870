use crate::region::RegionSpec;

/// One row's bar matrix, by type and row length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `L_m`: `2^(m-2) × 2^m`.
    Lower(u32),
    /// `C_m`: `2^m × 2^m`.
    Central(u32),
    /// `U_m`: `2^m × 2^(m-2)`.
    Upper(u32),
}

impl Factor {
    pub fn input_len(self) -> u32 {
        match self {
            Factor::Lower(m) => m - 2,
            Factor::Central(m) | Factor::Upper(m) => m,
        }
    }

    pub fn output_len(self) -> u32 {
        match self {
            Factor::Upper(m) => m - 2,
            Factor::Lower(m) | Factor::Central(m) => m,
        }
    }

    pub fn bar_len(self) -> u32 {
        match self {
            Factor::Lower(m) | Factor::Central(m) | Factor::Upper(m) => m,
        }
    }
}

/// Factors bottom row first.
pub fn factor_plan(spec: &RegionSpec) -> Vec<Factor> {
    let RegionSpec { p, q, n } = *spec;
    let lower = (1..=n).map(|k| Factor::Lower(p + 2 * k));
    let central = std::iter::repeat_n(Factor::Central(p + 2 * n), q as usize);
    let upper = (1..=n).rev().map(|k| Factor::Upper(p + 2 * k));
    lower.chain(central).chain(upper).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plans() {
        use Factor::*;
        assert_eq!(
            factor_plan(&RegionSpec::new(0, 0, 1)),
            vec![Lower(2), Upper(2)]
        );
        assert_eq!(
            factor_plan(&RegionSpec::new(2, 2, 0)),
            vec![Central(2), Central(2)]
        );
        assert_eq!(
            factor_plan(&RegionSpec::new(1, 0, 1)),
            vec![Lower(3), Upper(3)]
        );
        assert_eq!(
            factor_plan(&RegionSpec::new(3, 2, 4)),
            vec![
                Lower(5),
                Lower(7),
                Lower(9),
                Lower(11),
                Central(11),
                Central(11),
                Upper(11),
                Upper(9),
                Upper(7),
                Upper(5)
            ]
        );
        assert!(factor_plan(&RegionSpec::new(5, 0, 0)).is_empty());
    }

    #[test]
    fn plans_chain_and_match_rows() {
        for p in 0..5 {
            for q in 0..5 {
                for n in 0..5 {
                    let spec = RegionSpec::new(p, q, n);
                    let plan = factor_plan(&spec);
                    assert_eq!(plan.len() as u32, 2 * n + q);
                    if let Some(first) = plan.first() {
                        assert_eq!(first.input_len(), p);
                        assert_eq!(plan.last().unwrap().output_len(), p);
                    }
                    for w in plan.windows(2) {
                        assert_eq!(w[0].output_len(), w[1].input_len());
                    }
                    if n > 0 {
                        let bars: Vec<u32> = plan.iter().map(|f| f.bar_len()).collect();
                        assert_eq!(bars, spec.row_lengths());
                    }
                }
            }
        }
    }
}
