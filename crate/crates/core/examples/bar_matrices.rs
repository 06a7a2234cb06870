//! Prints the small bar state matrices and checks the block recurrences
//! against direct enumeration of single-row mosaics.

use aztec_count::oracle::bars::{bar_matrix_bruteforce, RightState};
use aztec_count::transfer::{bar_a, bar_b, central_c, lower_l, restricted_a, state_word, upper_u};

fn main() {
    let words: Vec<String> = (1..=4)
        .map(|i| state_word(i, 2).unwrap().to_string())
        .collect();
    println!("length-2 states in ab-order: {}", words.join(" "));

    println!("A_2 = {:?}", bar_a(2).unwrap());
    println!("B_2 = {:?}", bar_b(2).unwrap());
    println!("C_3 = {:?}", central_c(3).unwrap());
    println!("restricted A_3 = {:?}", restricted_a(3).unwrap());
    println!("L_4 = {:?}", lower_l(4).unwrap());
    println!("U_3 = {:?}", upper_u(3).unwrap());

    for k in 1..=7 {
        let ok = bar_a(k).unwrap() == bar_matrix_bruteforce(k, RightState::A)
            && bar_b(k).unwrap() == bar_matrix_bruteforce(k, RightState::B);
        println!("k = {k}: recurrence matches enumeration of 4^{k} rows: {ok}");
    }
}
