//! Oracles shared by the integration tests. None of them call the code
//! paths they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use peterson::rootsys::{LieType, RootSystem};
use peterson::weyl::{element, Word};

/// Positive roots by root strings: `β + α_i` is a root iff `p − ⟨β, α_i^∨⟩ > 0`,
/// where `p` is the largest `k` with `β − kα_i` a root.
pub fn positive_roots_by_strings(label: LieType) -> HashSet<Vec<i32>> {
    let cartan = label.cartan_matrix();
    let n = label.rank();
    let mut roots: HashSet<Vec<i32>> = HashSet::new();
    let mut layer: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while !layer.is_empty() {
        roots.extend(layer.iter().cloned());
        let mut next = HashSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down.iter().all(|&c| c >= 0) && roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i32 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    roots
}

/// `p_v(w)` by scanning all position subsets of `w` of size `ℓ(v)` and
/// keeping those whose subword is the same group element as `v` (which for
/// a subword of length `ℓ(v)` means it is a reduced word of `v`).
pub fn localization_by_elements(rs: &RootSystem, v: &Word, w: &Word) -> BigUint {
    let heights = heights_by_reflections(rs, w);
    let target = element(rs, v).unwrap();
    let k = v.len();
    let n = w.len();
    let mut total = BigUint::zero();
    if k > n {
        return total;
    }
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let picked: Vec<usize> = (0..n).filter(|p| mask & (1 << p) != 0).collect();
        let sub = Word::new(picked.iter().map(|&p| w.letters()[p]).collect());
        if element(rs, &sub).unwrap() == target {
            total += picked
                .iter()
                .fold(BigUint::one(), |acc, &p| acc * heights[p]);
        }
    }
    total
}

pub fn system(label: &str) -> RootSystem {
    RootSystem::new(label.parse().unwrap())
}

/// Inversion heights of a reduced word, applying one simple reflection at
/// a time: `r(i) = s_{j_1}(⋯s_{j_{i−1}}(α_{j_i}))`.
pub fn heights_by_reflections(rs: &RootSystem, w: &Word) -> Vec<u32> {
    let letters = w.letters();
    (0..letters.len())
        .map(|i| {
            let mut root = rs.simple_root(letters[i]).unwrap();
            for &j in letters[..i].iter().rev() {
                root = rs.reflect(j, &root).unwrap();
            }
            assert!(root.is_positive(), "{w} is not reduced");
            root.coeffs().iter().sum::<i32>() as u32
        })
        .collect()
}
