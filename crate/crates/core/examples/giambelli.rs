//! Giambelli evaluations `p_{v_K}(w_K)` of the Coxeter element at the
//! longest element for the exceptional types, computed by the dynamic
//! program and checked against the backtracking enumeration.

use std::time::Instant;

use peterson::billey::{billey_eval_bruteforce, billey_eval_dp, sound_window};
use peterson::peterson::{coxeter_word, giambelli_ratio};
use peterson::rootsys::RootSystem;
use peterson::weyl::{longest_element_word, reduced_words, SimpleSubset};

fn main() {
    for label in ["F4", "E6", "E7", "E8"] {
        let rs = RootSystem::new(label.parse().unwrap());
        let full = SimpleSubset::full(rs.rank());
        let w0 = longest_element_word(&rs, full);
        let v = coxeter_word(full).unwrap();
        let patterns = reduced_words(&rs, &v).unwrap();

        let started = Instant::now();
        let dp = billey_eval_dp(&rs, &v, &w0).unwrap();
        let dp_time = started.elapsed();

        let window = sound_window(&rs, &v, &w0).unwrap();
        let started = Instant::now();
        let oracle = billey_eval_bruteforce(&rs, &v, &w0, Some(window)).unwrap();
        let oracle_time = started.elapsed();
        assert_eq!(dp, oracle);

        println!("{label}: v = {v} has {} reduced words", patterns.len());
        println!("  p_v(w0) = {dp}  ({dp_time:?} by DP, {oracle_time:?} by backtracking over {window} letters)");
        println!("  ratio to the Monk product: {}", giambelli_ratio(&rs, full).unwrap());
    }
}
