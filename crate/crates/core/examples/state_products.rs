//! Walks the row-by-row state product for `AD(3,2;4)`, printing the shape of
//! each partial product and its `(1,1)` entry, and checks the final count
//! against the matrix-free engine.

use aztec_count::counter::{factor_plan, partial_products};
use aztec_count::{count_vector, RegionSpec};

fn main() {
    let spec = RegionSpec::new(3, 2, 4);
    println!(
        "{spec}: rows {:?}, {} squares",
        spec.row_lengths(),
        spec.square_count()
    );
    let plan = factor_plan(&spec);
    for (factor, n) in plan.iter().zip(partial_products(&spec).unwrap()) {
        println!(
            "N_{:<2} after {:<12} {:>4} x {:<5} (1,1) = {}",
            n.rows_consumed,
            format!("{factor:?}"),
            n.matrix.rows(),
            n.matrix.cols(),
            n.matrix.get(0, 0)
        );
    }
    println!("matrix-free count: {}", count_vector(&spec).unwrap());
}
