//! Monk evaluations `p_{s_i}(w_J)` on every fixed point of the A3 Peterson
//! variety, and at the longest element of E8.

use peterson::peterson::{monk_eval, monk_eval_at};
use peterson::rootsys::RootSystem;
use peterson::weyl::{longest_element_word, SimpleSubset};

fn main() {
    let a3 = RootSystem::new("A3".parse().unwrap());
    println!("{:<10} {:>4} {:>4} {:>4}", "J", "s1", "s2", "s3");
    for subset in SimpleSubset::all(a3.rank()) {
        let row: Vec<String> = (1..=3)
            .map(|i| monk_eval(&a3, i, subset).unwrap().to_string())
            .collect();
        println!("{:<10} {:>4} {:>4} {:>4}", subset.to_string(), row[0], row[1], row[2]);
    }

    let e8 = RootSystem::new("E8".parse().unwrap());
    let w0 = longest_element_word(&e8, SimpleSubset::full(8));
    for i in 1..=8 {
        println!("E8: p_s{i}(w0) = {}", monk_eval_at(&e8, i, &w0).unwrap());
    }
}
