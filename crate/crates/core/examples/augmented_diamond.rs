//! The augmented Aztec diamond is the `(1, 0)` family. Its tiling counts are
//! the central Delannoy numbers; small orders are confirmed by brute force.

use aztec_count::counter::delannoy_closed_form;
use aztec_count::oracle::count_tilings;
use aztec_count::{count_vector, RegionSpec};

fn main() {
    for n in 1..=12 {
        let spec = RegionSpec::new(1, 0, n);
        let count = count_vector(&spec).unwrap();
        let delannoy = delannoy_closed_form(n);
        let brute = if spec.square_count() <= 40 {
            count_tilings(&spec).unwrap().to_string()
        } else {
            "-".into()
        };
        println!("n = {n:>2}  squares = {:>4}  count = {count:>16}  delannoy = {delannoy:>16}  brute force = {brute}",
            spec.square_count());
        assert_eq!(count, delannoy);
    }
}
