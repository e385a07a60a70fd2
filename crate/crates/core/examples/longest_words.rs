//! Longest elements of parabolic subgroups and their reduced words.

use peterson::rootsys::RootSystem;
use peterson::weyl::{is_reduced, longest_element_word, reduced_words_limited, SimpleSubset};

fn main() {
    let rs = RootSystem::new("B3".parse().unwrap());
    for subset in SimpleSubset::all(rs.rank()) {
        let w = longest_element_word(&rs, subset);
        assert!(is_reduced(&rs, &w).unwrap());
        let count = reduced_words_limited(&rs, &w, 100).unwrap().len();
        println!("w_{subset:<8} = {w:<30} length {:>2}, {count} reduced words", w.len());
    }

    for label in ["E6", "E7", "E8"] {
        let rs = RootSystem::new(label.parse().unwrap());
        let w0 = longest_element_word(&rs, SimpleSubset::full(rs.rank()));
        println!("{label}: w0 has length {}", w0.len());
        println!("  {w0}");
    }
}
