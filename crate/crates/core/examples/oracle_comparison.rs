//! Three independent evaluations of `p_v(w)` on every pair of elements of
//! B3: the dynamic program, the backtracking enumeration and the literal
//! subset scan.

use peterson::billey::{billey_eval_bruteforce, billey_eval_dp, billey_eval_subsets};
use peterson::rootsys::RootSystem;
use peterson::weyl::elements_up_to;

fn main() {
    let rs = RootSystem::new("B3".parse().unwrap());
    let elements = elements_up_to(&rs, 9);
    let mut nonzero = 0;
    for (_, v) in &elements {
        for (_, w) in &elements {
            let dp = billey_eval_dp(&rs, v, w).unwrap();
            assert_eq!(dp, billey_eval_bruteforce(&rs, v, w, None).unwrap());
            assert_eq!(dp, billey_eval_subsets(&rs, v, w, None).unwrap());
            if !dp.is_zero() {
                nonzero += 1;
            }
        }
    }
    let n = elements.len();
    println!("B3: {} pairs agree, {nonzero} nonzero", n * n);
}
