//! Localization values `p_v(w)` projected to a single parameter `t`.
//!
//! Under the projection every positive root `α` becomes `ht(α)·t`, so the
//! localization of the class of `v` at `w` is `c·t^{ℓ(v)}`, where `c` sums,
//! over every set of positions of a reduced word of `w` spelling a reduced
//! word of `v`, the product of the inversion heights at those positions.
//!
//! [`billey_eval_dp`] computes `c` with one weighted-subsequence pass per
//! reduced word of `v`. [`billey_eval_bruteforce`] and [`billey_eval_subsets`]
//! enumerate position sets explicitly and serve as oracles.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::{inversion_roots, reduced_words, Word};

/// `coeff · t^degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalizationValue {
    pub coeff: BigUint,
    pub degree: usize,
}

impl LocalizationValue {
    pub fn new(coeff: BigUint, degree: usize) -> Self {
        LocalizationValue { coeff, degree }
    }

    pub fn zero(degree: usize) -> Self {
        LocalizationValue {
            coeff: BigUint::zero(),
            degree,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for LocalizationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}·t", self.coeff),
            d => write!(f, "{}·t^{}", self.coeff, d),
        }
    }
}

/// Heights of the inversion roots of a reduced word, position by position.
pub fn inversion_heights(rs: &RootSystem, word: &Word) -> Result<Vec<u32>> {
    inversion_roots(rs, word)?
        .iter()
        .map(|r| r.height())
        .collect()
}

/// Sum over all occurrences of `pattern` as a subsequence of `text` of the
/// product of `weights` at the matched positions.
pub fn weighted_subsequence_sum(text: &[usize], weights: &[u32], pattern: &[usize]) -> BigUint {
    debug_assert_eq!(text.len(), weights.len());
    let m = pattern.len();
    let mut dp = vec![BigUint::zero(); m + 1];
    dp[0] = BigUint::one();
    for (&letter, &weight) in text.iter().zip(weights) {
        for k in (1..=m).rev() {
            if pattern[k - 1] == letter && !dp[k - 1].is_zero() {
                let add = &dp[k - 1] * weight;
                dp[k] += add;
            }
        }
    }
    dp.swap_remove(m)
}

/// `p_v(w)` via a weighted-subsequence DP per reduced word of `v`.
///
/// Distinct reduced words of `v` match disjoint position sets, so the
/// per-pattern totals add up to the exact value.
pub fn billey_eval_dp(rs: &RootSystem, v: &Word, w: &Word) -> Result<LocalizationValue> {
    let patterns = reduced_words(rs, v)?;
    let heights = inversion_heights(rs, w)?;
    let coeff = patterns
        .iter()
        .map(|u| weighted_subsequence_sum(w.letters(), &heights, u.letters()))
        .fold(BigUint::zero(), |acc, x| acc + x);
    Ok(LocalizationValue::new(coeff, v.len()))
}

/// Smallest prefix length of `w` that contains every occurrence of a final
/// letter of some reduced word of `v`. Position sets outside that prefix
/// cannot spell a reduced word of `v`.
pub fn sound_window(rs: &RootSystem, v: &Word, w: &Word) -> Result<usize> {
    let patterns = reduced_words(rs, v)?;
    Ok(earliest_sound(&patterns, w).map_or(0, |(_, last)| last))
}

// (letter, last 1-based position) maximizing the position.
fn earliest_sound(patterns: &[Word], w: &Word) -> Option<(usize, usize)> {
    let finals: HashSet<usize> = patterns
        .iter()
        .filter_map(|u| u.letters().last().copied())
        .collect();
    finals
        .into_iter()
        .filter_map(|f| {
            w.letters()
                .iter()
                .rposition(|&j| j == f)
                .map(|p| (f, p + 1))
        })
        .max_by_key(|&(f, p)| (p, std::cmp::Reverse(f)))
}

fn check_window(patterns: &[Word], v: &Word, w: &Word, window: Option<usize>) -> Result<usize> {
    let Some(window) = window else {
        return Ok(w.len());
    };
    if window > w.len() {
        return Err(Error::WindowTooLong {
            window,
            len: w.len(),
        });
    }
    if v.len() > window {
        return Err(Error::WindowTooShort {
            window,
            pattern_len: v.len(),
        });
    }
    if let Some((letter, last)) = earliest_sound(patterns, w) {
        if last > window {
            return Err(Error::UnsoundWindow {
                window,
                letter,
                last,
            });
        }
    }
    Ok(window)
}

#[derive(Default)]
struct TrieNode {
    children: Vec<(usize, usize)>,
    terminal: bool,
}

struct Trie {
    nodes: Vec<TrieNode>,
}

impl Trie {
    fn build(patterns: &[Word]) -> Self {
        let mut nodes = vec![TrieNode::default()];
        for u in patterns {
            let mut at = 0;
            for &letter in u.letters() {
                at = match nodes[at].children.iter().find(|(l, _)| *l == letter) {
                    Some(&(_, next)) => next,
                    None => {
                        nodes.push(TrieNode::default());
                        let next = nodes.len() - 1;
                        nodes[at].children.push((letter, next));
                        next
                    }
                };
            }
            nodes[at].terminal = true;
        }
        Trie { nodes }
    }
}

/// Running sum that stays in `u128` until it overflows.
#[derive(Default)]
struct Accumulator {
    small: u128,
    big: BigUint,
}

impl Accumulator {
    fn add_small(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = x;
            }
        }
    }

    fn add_big(&mut self, x: &BigUint) {
        self.big += x;
    }

    fn total(self) -> BigUint {
        self.big + self.small
    }
}

#[derive(Clone)]
enum Product {
    Small(u128),
    Big(BigUint),
}

impl Product {
    fn times(&self, h: u32) -> Product {
        match self {
            Product::Small(p) => match p.checked_mul(h as u128) {
                Some(q) => Product::Small(q),
                None => Product::Big(BigUint::from(*p) * h),
            },
            Product::Big(p) => Product::Big(p * h),
        }
    }
}

struct Backtrack<'a> {
    trie: Trie,
    // positions[letter] = 0-based positions inside the window, increasing.
    positions: Vec<Vec<usize>>,
    heights: &'a [u32],
    acc: Accumulator,
}

impl Backtrack<'_> {
    fn descend(&mut self, node: usize, start: usize, product: Product) {
        if self.trie.nodes[node].terminal {
            match &product {
                Product::Small(p) => self.acc.add_small(*p),
                Product::Big(p) => self.acc.add_big(p),
            }
        }
        for k in 0..self.trie.nodes[node].children.len() {
            let (letter, child) = self.trie.nodes[node].children[k];
            let slots = &self.positions[letter];
            let from = slots.partition_point(|&p| p < start);
            for idx in from..self.positions[letter].len() {
                let pos = self.positions[letter][idx];
                let next = product.times(self.heights[pos]);
                self.descend(child, pos + 1, next);
            }
        }
    }
}

/// `p_v(w)` by explicit enumeration of position sets inside the first
/// `window` letters of `w` (all of `w` when `None`), backtracking along the
/// prefixes of the reduced words of `v`.
///
/// An explicit window is rejected if it is longer than `w`, shorter than
/// `v`, or cuts off an occurrence of a final letter of some reduced word of
/// `v`; the error names the earliest sound window.
pub fn billey_eval_bruteforce(
    rs: &RootSystem,
    v: &Word,
    w: &Word,
    window: Option<usize>,
) -> Result<LocalizationValue> {
    let patterns = reduced_words(rs, v)?;
    let heights = inversion_heights(rs, w)?;
    let window = check_window(&patterns, v, w, window)?;
    let mut positions = vec![Vec::new(); rs.rank() + 1];
    for (p, &j) in w.letters()[..window].iter().enumerate() {
        positions[j].push(p);
    }
    let mut search = Backtrack {
        trie: Trie::build(&patterns),
        positions,
        heights: &heights,
        acc: Accumulator::default(),
    };
    search.descend(0, 0, Product::Small(1));
    Ok(LocalizationValue::new(search.acc.total(), v.len()))
}

/// Number of position sets the literal subset scan inspects.
pub fn subset_scan_cost(v: &Word, window: usize) -> BigUint {
    let k = v.len();
    if k > window {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (window - i) / (i + 1))
}

/// `p_v(w)` by scanning every `ℓ(v)`-element subset of the window and
/// keeping those whose letters spell a reduced word of `v`. Exponential;
/// intended for fidelity runs on small inputs.
pub fn billey_eval_subsets(
    rs: &RootSystem,
    v: &Word,
    w: &Word,
    window: Option<usize>,
) -> Result<LocalizationValue> {
    let patterns = reduced_words(rs, v)?;
    let heights = inversion_heights(rs, w)?;
    let window = check_window(&patterns, v, w, window)?;
    let wanted: HashSet<&[usize]> = patterns.iter().map(|u| u.letters()).collect();
    let letters = w.letters();
    let mut acc = BigUint::zero();
    for subset in (0..window).combinations(v.len()) {
        let spelled: Vec<usize> = subset.iter().map(|&p| letters[p]).collect();
        if wanted.contains(spelled.as_slice()) {
            acc += subset
                .iter()
                .fold(BigUint::one(), |prod, &p| prod * heights[p]);
        }
    }
    Ok(LocalizationValue::new(acc, v.len()))
}
