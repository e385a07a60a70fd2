//! Positive roots, heights and the root poset of a finite root system.
//!
//! ```text
//! cargo run --example root_systems -- F4
//! ```

use peterson::rootsys::RootSystem;

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::new(label.parse().expect("a type label such as E8"));

    println!("{} has rank {} and {} positive roots", rs.label(), rs.rank(), rs.positives().len());
    println!("Cartan matrix:");
    for row in rs.cartan() {
        println!("  {row:?}");
    }

    for root in rs.positives().iter().take(16) {
        println!("  {root}  height {}", rs.height(root).unwrap());
    }
    if rs.positives().len() > 16 {
        println!("  ... {} more", rs.positives().len() - 16);
    }

    let highest = rs.highest_root();
    println!("highest root {highest} of height {}", rs.height(&highest).unwrap());
    let mut per_height = vec![0; rs.height(&highest).unwrap() as usize];
    for rank in rs.poset_ranks() {
        per_height[rank] += 1;
    }
    println!("roots per height: {per_height:?}");
    println!("{} cover relations, height sum {}", rs.root_poset_covers().len(), rs.height_sum());
}
