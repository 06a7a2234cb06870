//! Classical Aztec diamonds: the matrix-free counter against `2^(n(n+1)/2)`.
//!
//! ```bash
//! cargo run --release --example aztec_diamond -- 10
//! ```

use std::time::Instant;

use aztec_count::counter::aztec_closed_form;
use aztec_count::{count_vector, RegionSpec};

fn main() {
    let max_n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    println!("  n        ms  tilings");
    for n in 0..=max_n {
        let start = Instant::now();
        let count = count_vector(&RegionSpec::aztec(n)).expect("within vector cap");
        let ms = start.elapsed().as_millis();
        let mark = if count == aztec_closed_form(n) {
            ""
        } else {
            "  MISMATCH"
        };
        println!("{n:>3}  {ms:>8}  {count}{mark}");
    }
}
