//! Monk structure constants `p_{s_i} p_{v_K} = Σ c_{K'} t^e p_{v_{K'}}`
//! solved from the localization table.
//!
//! ```text
//! cargo run --example structure_constants -- E6 3 2,3
//! ```

use num_traits::Zero;
use peterson::peterson::{monk_structure_constants_with, structure_constant_residuals, FixedPoints};
use peterson::rootsys::RootSystem;
use peterson::weyl::{SimpleSubset, Word};

fn main() {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "B3".into());
    let i: usize = args.next().map_or(2, |s| s.parse().unwrap());
    let k: Word = args.next().unwrap_or_else(|| "1,3".into()).parse().unwrap();

    let rs = RootSystem::new(label.parse().unwrap());
    let k = SimpleSubset::from_indices(&rs, k.letters()).unwrap();
    let points = FixedPoints::new(&rs).unwrap();
    let constants = monk_structure_constants_with(&points, i, k).unwrap();

    println!("{label}: p_s{i} · p_v{k} =");
    for (class, term) in &constants {
        let t = match term.t_exponent {
            0 => String::new(),
            1 => "t ".into(),
            e => format!("t^{e} "),
        };
        println!("  + ({}) {t}p_v{class}", term.coeff);
    }

    let residuals = structure_constant_residuals(&points, i, k, &constants);
    assert!(residuals.iter().all(|(_, r)| r.is_zero()));
    println!("residual vanishes at all {} fixed points", residuals.len());
}
