//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails if
//! any criterion does.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use aztec_count::counter::{binomial, count_dense, count_vector, BigCount};
use aztec_count::oracle::{self, bars::RightState};
use aztec_count::transfer::{bar_a, bar_b, central_c, lower_l, restricted_a, upper_u};
use aztec_count::RegionSpec;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        what: impl std::fmt::Display,
        got: T,
        want: T,
    ) {
        if got != want {
            self.failures
                .push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

fn criterion(id: u32, title: &str, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome::new();
    body(&mut out);
    let ok = out.failures.is_empty();
    println!(
        "[{}] criterion {id}: {title} ({:.2} s)",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    for f in &out.failures {
        println!("       {f}");
    }
    ok
}

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

fn vector(spec: RegionSpec) -> BigCount {
    count_vector(&spec).expect("within vector cap")
}

fn dense(spec: RegionSpec) -> BigCount {
    count_dense(&spec).expect("within dense cap")
}

fn brute(spec: RegionSpec) -> BigCount {
    BigCount(oracle::count_tilings(&spec).expect("within oracle cap"))
}

/// `Σ_k C(n,k)·C(n+k,k)`.
fn delannoy_sum(n: u64) -> BigCount {
    BigCount((0..=n).map(|k| binomial(n, k) * binomial(n + k, k)).sum())
}

/// Specs of the oracle sweep: `p, q ≤ 4`, `n ≤ 2`, at most 36 squares.
fn oracle_sweep() -> Vec<RegionSpec> {
    let mut v = Vec::new();
    for p in 0..=4 {
        for q in 0..=4 {
            for n in 0..=2 {
                let s = RegionSpec::new(p, q, n);
                if s.square_count() <= 36 {
                    v.push(s);
                }
            }
        }
    }
    v
}

fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

fn aztec_theorem(c: &mut Outcome) {
    let start = Instant::now();
    for n in 1..=8u32 {
        let exp = n as u64 * (n as u64 + 1) / 2;
        c.eq(
            format!("count(0,0,{n})"),
            vector(RegionSpec::aztec(n)),
            BigCount(BigUint::from(1u32) << exp),
        );
    }
    c.check(start.elapsed() < Duration::from_secs(10), || {
        format!("took {:?}, limit 10 s", start.elapsed())
    });
}

fn delannoy(c: &mut Outcome) {
    // Orientation first: (p,q) = (1,0) must be the augmented diamond.
    c.eq("D(1)", delannoy_sum(1), big(3));
    c.eq("D(2)", delannoy_sum(2), big(13));
    for n in 1..=2 {
        c.eq(
            format!("oracle(1,0,{n})"),
            brute(RegionSpec::new(1, 0, n)),
            delannoy_sum(n as u64),
        );
    }
    for n in 1..=6 {
        c.eq(
            format!("count(1,0,{n})"),
            vector(RegionSpec::new(1, 0, n)),
            delannoy_sum(n as u64),
        );
    }
}

fn oracle_equivalence(c: &mut Outcome) {
    let start = Instant::now();
    let specs = oracle_sweep();
    c.check(specs.len() > 40, || {
        format!("sweep unexpectedly small: {}", specs.len())
    });
    for spec in specs {
        let want = brute(spec);
        c.eq(format!("dense {spec}"), dense(spec), want.clone());
        c.eq(format!("vector {spec}"), vector(spec), want);
    }
    c.check(start.elapsed() < Duration::from_secs(300), || {
        format!("took {:?}, limit 300 s", start.elapsed())
    });
}

fn parity(c: &mut Outcome) {
    let odd: Vec<_> = oracle_sweep()
        .into_iter()
        .filter(|s| s.p % 2 == 1 && s.q % 2 == 1)
        .collect();
    c.check(!odd.is_empty(), || "no odd-area specs swept".into());
    for spec in odd {
        // Straight through the product; no parity shortcut on this path.
        c.eq(format!("dense {spec}"), dense(spec), big(0));
        c.eq(format!("vector {spec}"), vector(spec), big(0));
    }
}

fn rotation(c: &mut Outcome) {
    for spec in oracle_sweep() {
        let turned = RegionSpec::new(spec.q, spec.p, spec.n);
        c.eq(format!("{spec} vs {turned}"), dense(spec), dense(turned));
    }
}

fn structural(c: &mut Outcome) {
    for k in 1..=8 {
        let a = bar_a(k).unwrap();
        let b = bar_b(k).unwrap();
        let cm = central_c(k).unwrap();
        let r = restricted_a(k).unwrap();
        for (name, m) in [("A", &a), ("B", &b), ("C", &cm), ("restricted A", &r)] {
            c.check(m.is_binary(), || {
                format!("{name}_{k} has an entry outside {{0,1}}")
            });
        }
        c.check(cm.is_symmetric(), || format!("C_{k} not symmetric"));
        c.check(cm == a, || format!("C_{k} != A_{k}"));
        // Rows whose bottom letter under the leftmost tile is `a`.
        c.check(r == a.select_rows(|i| i & 1 == 0), || {
            format!("restricted A_{k} row selection")
        });
        if k <= 6 {
            c.check(
                a == oracle::bars::bar_matrix_bruteforce(k, RightState::A),
                || format!("A_{k} differs from bar enumeration"),
            );
        }
    }
    c.check(central_c(0).unwrap().to_u64_rows() == vec![vec![1]], || {
        "C_0".into()
    });
    for m in 2..=8 {
        let l = lower_l(m).unwrap();
        let u = upper_u(m).unwrap();
        c.check(l.is_binary() && u.is_binary(), || {
            format!("L_{m}/U_{m} not 0/1")
        });
        c.check(u == l.transpose(), || format!("U_{m} != L_{m}ᵗ"));
    }
}

fn bijection(c: &mut Outcome) {
    let mut specs = Vec::new();
    for p in 0..=16 {
        for q in 0..=16 {
            for n in 0..=2 {
                let s = RegionSpec::new(p, q, n);
                if s.square_count() <= 16 {
                    specs.push(s);
                }
            }
        }
    }
    for spec in specs {
        let tilings = oracle::enumerate_tilings(&spec).unwrap();
        let count = oracle::count_mosaics_bruteforce(&spec).unwrap();
        c.eq(
            format!("{spec} counts"),
            BigUint::from(tilings.len()),
            count,
        );

        let mut image: Vec<_> = tilings.iter().map(oracle::tiling_to_mosaic).collect();
        c.check(image.iter().all(oracle::is_domino_mosaic), || {
            format!("{spec}: invalid image")
        });
        image.sort();
        let n = image.len();
        image.dedup();
        c.check(image.len() == n, || {
            format!("{spec}: conversion not injective")
        });
        let mut valid = oracle::enumerate_domino_mosaics(&spec).unwrap();
        valid.sort();
        c.check(image == valid, || {
            format!("{spec}: image is not the set of domino mosaics")
        });
    }
}

fn rectangles(c: &mut Outcome) {
    let (mut f_prev, mut f) = (0u64, 1u64); // F_1 = 1
    for q in 1..=10 {
        let next = f + f_prev;
        f_prev = f;
        f = next; // F_{q+1}
        let spec = RegionSpec::new(2, q, 0);
        c.eq(format!("dense {spec}"), dense(spec), big(f));
        c.eq(format!("vector {spec}"), vector(spec), big(f));
        if q <= 6 {
            c.eq(format!("oracle {spec}"), brute(spec), big(f));
        }
    }
}

fn performance(c: &mut Outcome) {
    let start = Instant::now();
    let got = vector(RegionSpec::aztec(10));
    let elapsed = start.elapsed();
    c.eq("count(0,0,10)", got, "36028797018963968".parse().unwrap());
    c.check(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}, limit 60 s")
    });
    match peak_rss_bytes() {
        Some(rss) => c.check(rss < 2 << 30, || {
            format!("peak RSS {rss} bytes, limit 2 GiB")
        }),
        None => c.check(false, || "could not read peak RSS".into()),
    }
}

#[test]
fn acceptance() {
    let results = [
        criterion(1, "Aztec diamond theorem, n = 1..8", aztec_theorem),
        criterion(2, "Delannoy numbers for (1,0,n), n = 1..6", delannoy),
        criterion(
            3,
            "dense = vector = oracle up to 36 squares",
            oracle_equivalence,
        ),
        criterion(4, "odd-area regions count zero", parity),
        criterion(5, "quarter-turn symmetry (p,q,n) ~ (q,p,n)", rotation),
        criterion(6, "bar matrix structure, k <= 8", structural),
        criterion(7, "tiling/mosaic bijection up to 16 squares", bijection),
        criterion(8, "2 x q rectangles give Fibonacci numbers", rectangles),
        criterion(9, "count(0,0,10) = 2^55 within 60 s and 2 GiB", performance),
    ];
    let failed: Vec<usize> = (1..=results.len()).filter(|&i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
