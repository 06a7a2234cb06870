//! Self-checks run by `aztec-count verify`.
//!
//! Each suite compares the transfer-matrix counter against something it does
//! not share code with: closed forms, brute-force enumeration, or algebraic
//! identities between the matrix families.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::counter::{
    aztec_closed_form, count_dense, count_vector, delannoy_closed_form, BigCount,
};
use crate::error::Result;
use crate::oracle::{self, bars::RightState};
use crate::region::RegionSpec;
use crate::transfer::{self, StateMatrix};

/// Source of the `(A_k, B_k)` bar matrices under test.
pub type BarSource = fn(u32) -> Result<(StateMatrix, StateMatrix)>;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Largest region (in squares) compared against the tiling oracle.
    pub max_squares: u64,
    pub bar_source: BarSource,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_squares: 36,
            bar_source: transfer::bar_pair,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn failing(&self) -> impl Iterator<Item = &SuiteReport> {
        self.suites.iter().filter(|s| !s.passed())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status}  {:<18} {:>5} cases  {:>7.1} ms",
                s.name,
                s.cases,
                s.elapsed.as_secs_f64() * 1e3
            )?;
            for msg in &s.failures {
                writeln!(f, "      - {msg}")?;
            }
        }
        if self.all_passed() {
            write!(f, "all suites pass")
        } else {
            let names: Vec<_> = self.failing().map(|s| s.name).collect();
            write!(f, "failing suites: {}", names.join(", "))
        }
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        what: impl fmt::Display,
        got: Result<T>,
        want: &T,
    ) {
        self.cases += 1;
        match got {
            Ok(g) if &g == want => {}
            Ok(g) => self.failures.push(format!("{what}: got {g}, want {want}")),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }
}

fn run(name: &'static str, body: impl FnOnce(&mut Suite)) -> SuiteReport {
    let start = Instant::now();
    let mut suite = Suite::new(name);
    body(&mut suite);
    SuiteReport {
        name: suite.name,
        cases: suite.cases,
        failures: suite.failures,
        elapsed: start.elapsed(),
    }
}

/// Specs with `p, q ≤ 4`, `n ≤ 2` and at most `max_squares` squares.
pub fn oracle_sweep(max_squares: u64) -> Vec<RegionSpec> {
    let mut specs = Vec::new();
    for p in 0..=4 {
        for q in 0..=4 {
            for n in 0..=2 {
                let s = RegionSpec::new(p, q, n);
                if s.square_count() <= max_squares {
                    specs.push(s);
                }
            }
        }
    }
    specs
}

/// `F_k` with `F_1 = F_2 = 1`.
pub fn fibonacci(k: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::ZERO, BigUint::from(1u32));
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

fn closed_forms() -> SuiteReport {
    run("closed-forms", |s| {
        for n in 1..=8 {
            let spec = RegionSpec::aztec(n);
            s.expect_eq(spec, count_vector(&spec), &aztec_closed_form(n));
        }
        for n in 1..=2 {
            let spec = RegionSpec::new(1, 0, n);
            s.expect_eq(
                format!("{spec} oracle"),
                oracle::count_tilings(&spec).map(BigCount),
                &delannoy_closed_form(n),
            );
        }
        for n in 1..=6 {
            let spec = RegionSpec::new(1, 0, n);
            s.expect_eq(spec, count_vector(&spec), &delannoy_closed_form(n));
        }
    })
}

fn bar_recurrence(source: BarSource) -> SuiteReport {
    run("bar-recurrence", |s| {
        for k in 1..=6 {
            match source(k) {
                Ok((a, b)) => {
                    let brute_a = oracle::bars::bar_matrix_bruteforce(k, RightState::A);
                    let brute_b = oracle::bars::bar_matrix_bruteforce(k, RightState::B);
                    s.check(a == brute_a, || {
                        format!("A_{k} differs from bar enumeration")
                    });
                    s.check(b == brute_b, || {
                        format!("B_{k} differs from bar enumeration")
                    });
                }
                Err(e) => s.check(false, || format!("A_{k}: {e}")),
            }
        }
    })
}

fn structural(source: BarSource) -> SuiteReport {
    run("structural", |s| {
        for k in 1..=8 {
            let built = (|| -> Result<_> {
                Ok((
                    source(k)?,
                    transfer::central_c(k)?,
                    transfer::restricted_a(k)?,
                ))
            })();
            let ((a, b), c, r) = match built {
                Ok(v) => v,
                Err(e) => {
                    s.check(false, || format!("k = {k}: {e}"));
                    continue;
                }
            };
            s.check(
                a.is_binary() && b.is_binary() && c.is_binary() && r.is_binary(),
                || format!("k = {k}: entry outside {{0,1}}"),
            );
            s.check(c.is_symmetric(), || format!("C_{k} not symmetric"));
            s.check(c == a, || format!("C_{k} != A_{k}"));
            s.check(r == a.select_rows(|i| i % 2 == 0), || {
                format!("restricted A_{k} is not the a-ending rows of A_{k}")
            });
        }
        for m in 2..=8 {
            match (transfer::lower_l(m), transfer::upper_u(m)) {
                (Ok(l), Ok(u)) => {
                    s.check(l.is_binary(), || format!("L_{m} not 0/1"));
                    s.check(u == l.transpose(), || format!("U_{m} != L_{m}ᵗ"));
                }
                (Err(e), _) | (_, Err(e)) => s.check(false, || format!("m = {m}: {e}")),
            }
        }
    })
}

fn oracle_equivalence(max_squares: u64) -> SuiteReport {
    run("oracle-equivalence", |s| {
        for spec in oracle_sweep(max_squares) {
            let want = match oracle::count_tilings(&spec) {
                Ok(c) => BigCount(c),
                Err(e) => {
                    s.check(false, || format!("{spec} oracle: {e}"));
                    continue;
                }
            };
            s.expect_eq(format!("{spec} dense"), count_dense(&spec), &want);
            s.expect_eq(format!("{spec} vector"), count_vector(&spec), &want);
        }
    })
}

fn rotation_symmetry(max_squares: u64) -> SuiteReport {
    run("rotation-symmetry", |s| {
        for spec in oracle_sweep(max_squares) {
            let turned = RegionSpec::new(spec.q, spec.p, spec.n);
            match count_vector(&turned) {
                Ok(want) => s.expect_eq(format!("{spec} vs {turned}"), count_vector(&spec), &want),
                Err(e) => s.check(false, || format!("{turned}: {e}")),
            }
        }
    })
}

fn parity() -> SuiteReport {
    run("parity", |s| {
        let zero = BigCount::default();
        for p in (1..=5).step_by(2) {
            for q in (1..=5).step_by(2) {
                for n in 0..=3 {
                    let spec = RegionSpec::new(p, q, n);
                    s.expect_eq(format!("{spec} dense"), count_dense(&spec), &zero);
                    s.expect_eq(format!("{spec} vector"), count_vector(&spec), &zero);
                }
            }
        }
    })
}

fn bijection() -> SuiteReport {
    run("mosaic-bijection", |s| {
        for spec in oracle_sweep(16) {
            let (tilings, mosaics) = match (
                oracle::enumerate_tilings(&spec),
                oracle::enumerate_domino_mosaics(&spec),
            ) {
                (Ok(t), Ok(m)) => (t, m),
                (Err(e), _) | (_, Err(e)) => {
                    s.check(false, || format!("{spec}: {e}"));
                    continue;
                }
            };
            let mut image: Vec<_> = tilings.iter().map(oracle::tiling_to_mosaic).collect();
            s.check(image.iter().all(oracle::is_domino_mosaic), || {
                format!("{spec}: converted tiling violates the mosaic rules")
            });
            image.sort();
            let before = image.len();
            image.dedup();
            s.check(image.len() == before, || {
                format!("{spec}: conversion not injective")
            });
            let mut valid = mosaics;
            valid.sort();
            s.check(image == valid, || {
                format!(
                    "{spec}: {} tilings but {} domino mosaics",
                    before,
                    valid.len()
                )
            });
        }
    })
}

fn rectangles() -> SuiteReport {
    run("rectangles", |s| {
        for q in 1..=10 {
            let spec = RegionSpec::new(2, q, 0);
            let want = BigCount(fibonacci(q + 1));
            s.expect_eq(format!("{spec} vector"), count_vector(&spec), &want);
            if q <= 6 {
                s.expect_eq(
                    format!("{spec} oracle"),
                    oracle::count_tilings(&spec).map(BigCount),
                    &want,
                );
            }
        }
    })
}

/// Runs every suite.
pub fn verify(config: &VerifyConfig) -> VerifyReport {
    VerifyReport {
        suites: vec![
            closed_forms(),
            bar_recurrence(config.bar_source),
            structural(config.bar_source),
            oracle_equivalence(config.max_squares),
            rotation_symmetry(config.max_squares),
            parity(),
            bijection(),
            rectangles(),
        ],
    }
}

/// Bar matrices with the `B_1` seed flipped. Used to check that `verify`
/// notices a broken recurrence.
pub fn corrupted_bar_pair(k: u32) -> Result<(StateMatrix, StateMatrix)> {
    let (a, mut b) = transfer::bar_pair(k)?;
    let flipped = if b.get(0, 0) == &BigUint::ZERO {
        1u32
    } else {
        0
    };
    b.set(0, 0, BigUint::from(flipped));
    Ok((a, b))
}
