//! Writes a CSV table of counts for `p, q ≤ 4`, `n ≤ 3`, the same format as
//! `aztec-count sweep`.
//!
//! ```bash
//! cargo run --release --example parameter_table > table.csv
//! ```

use aztec_count::cli::{record, sweep};
use aztec_count::Method;

fn main() {
    let rows = sweep(4, 4, 3, Method::Vector);
    record::write_csv(std::io::stdout().lock(), &rows).unwrap();
}
