//! The full per-type pipeline: longest word, inversion heights, Monk and
//! Giambelli evaluations, their ratio, and a timed comparison of the DP
//! evaluator against the backtracking oracle.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::billey::{
    billey_eval_bruteforce, billey_eval_dp, inversion_heights, sound_window,
};
use crate::error::{Error, Result};
use crate::peterson::{coxeter_word, giambelli_ratio_at, monk_eval_at};
use crate::rootsys::RootSystem;
use crate::weyl::{element, longest_element_word, reduced_words, SimpleSubset, Word};

/// An arbitrary-precision integer that serializes as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigNum(pub BigInt);

impl From<BigUint> for BigNum {
    fn from(x: BigUint) -> Self {
        BigNum(x.into())
    }
}

impl std::fmt::Display for BigNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for BigNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = self
            .0
            .to_str_radix(10)
            .parse()
            .map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub numerator: BigNum,
    pub denominator: BigNum,
}

impl Fraction {
    pub fn from_rational(r: &BigRational) -> Self {
        Fraction {
            numerator: BigNum(r.numer().clone()),
            denominator: BigNum(r.denom().clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub method: String,
    pub window: usize,
    pub value: BigNum,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub type_label: String,
    pub longest_word: Vec<usize>,
    pub inversion_heights: Vec<u32>,
    pub monk: BTreeMap<String, BigNum>,
    pub monk_total: BigNum,
    pub giambelli: BigNum,
    pub ratio: Fraction,
    pub reduced_word_count_vk: usize,
    pub reduced_words_vk: Vec<Vec<usize>>,
    /// Last position of `w_K` carrying a final letter of `v_K`.
    pub sound_window: usize,
    pub oracle: OracleCheck,
    /// Stage durations in microseconds; absent when timing is disabled.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<BTreeMap<String, u64>>,
}

/// Options for [`build_report`].
#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    /// Alternative reduced word of the longest element to use instead of
    /// the canonical one.
    pub seed_word: Option<Word>,
    pub timings: bool,
}

/// Checks that `seed` is a reduced word of `w_J` and returns it, or the
/// canonical word when no seed is given.
pub fn resolve_longest(rs: &RootSystem, subset: SimpleSubset, seed: Option<&Word>) -> Result<Word> {
    let canonical = longest_element_word(rs, subset);
    let Some(seed) = seed else {
        return Ok(canonical);
    };
    inversion_heights(rs, seed)?;
    if element(rs, seed)? != element(rs, &canonical)? {
        return Err(Error::WrongElement {
            word: seed.to_string(),
        });
    }
    Ok(seed.clone())
}

pub fn build_report(rs: &RootSystem, options: &ReportOptions) -> Result<ReportRecord> {
    let mut timings = BTreeMap::new();
    let mut stage = |name: &str, started: Instant| {
        timings.insert(name.to_string(), started.elapsed().as_micros() as u64);
    };

    let full = SimpleSubset::full(rs.rank());
    let started = Instant::now();
    let w0 = resolve_longest(rs, full, options.seed_word.as_ref())?;
    let heights = inversion_heights(rs, &w0)?;
    stage("lists", started);

    let started = Instant::now();
    let mut monk = BTreeMap::new();
    let mut monk_total = BigUint::default();
    for i in 1..=rs.rank() {
        let m = monk_eval_at(rs, i, &w0)?.coeff;
        monk_total += &m;
        monk.insert(i.to_string(), BigNum::from(m));
    }
    stage("monk", started);

    let v = coxeter_word(full)?;
    let started = Instant::now();
    let patterns = reduced_words(rs, &v)?;
    let giambelli = billey_eval_dp(rs, &v, &w0)?.coeff;
    stage("giambelli_dp", started);

    let ratio = giambelli_ratio_at(rs, full, &w0)?;

    let started = Instant::now();
    let window = sound_window(rs, &v, &w0)?;
    let oracle_value = billey_eval_bruteforce(rs, &v, &w0, Some(window))?.coeff;
    stage("giambelli_backtrack", started);

    if oracle_value != giambelli {
        return Err(Error::Invariant(format!(
            "DP gives {giambelli} but the backtracking oracle gives {oracle_value}"
        )));
    }

    Ok(ReportRecord {
        type_label: rs.label().to_string(),
        longest_word: w0.letters().to_vec(),
        inversion_heights: heights,
        monk,
        monk_total: BigNum::from(monk_total),
        giambelli: BigNum::from(giambelli),
        ratio: Fraction::from_rational(&ratio),
        reduced_word_count_vk: patterns.len(),
        reduced_words_vk: patterns.iter().map(|u| u.letters().to_vec()).collect(),
        sound_window: window,
        oracle: OracleCheck {
            method: "backtrack".into(),
            window,
            value: BigNum::from(oracle_value),
            agrees: true,
        },
        timings_us: options.timings.then_some(timings),
    })
}
