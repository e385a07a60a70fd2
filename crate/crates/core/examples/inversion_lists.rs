//! The letters of the longest word of E6, E7 and E8 next to the heights of
//! the corresponding inversion roots.

use peterson::billey::inversion_heights;
use peterson::rootsys::RootSystem;
use peterson::weyl::{inversion_roots, longest_element_word, SimpleSubset};

fn main() {
    for label in ["E6", "E7", "E8"] {
        let rs = RootSystem::new(label.parse().unwrap());
        let w0 = longest_element_word(&rs, SimpleSubset::full(rs.rank()));
        let heights = inversion_heights(&rs, &w0).unwrap();
        println!("{label}");
        println!("  letters {:?}", w0.letters());
        println!("  heights {heights:?}");

        // every positive root shows up exactly once
        let mut roots = inversion_roots(&rs, &w0).unwrap();
        roots.sort_by_key(|r| rs.position(r));
        assert_eq!(roots, rs.positives());
        let total: u32 = heights.iter().sum();
        assert_eq!(u64::from(total), rs.height_sum());
    }
}
