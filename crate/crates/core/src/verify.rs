//! Invariant suite behind `peterson verify`.
//!
//! Each check runs against one root system and returns a short detail
//! string on success or a description of the first violation.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::billey::{billey_eval_bruteforce, billey_eval_dp, sound_window};
use crate::peterson::{
    giambelli_ratio, monk_eval, monk_eval_at, monk_structure_constants_with, structure_constant_residuals,
    FixedPoints,
};
use crate::rootsys::{LieType, Root, RootSystem};
use crate::weyl::{
    act, element, elements_up_to, inversion_roots, is_reduced, longest_element_word,
    reduced_words, SimpleSubset, Word,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&RootSystem) -> Result<String, String>;

fn labels(level: Level) -> Vec<&'static str> {
    match level {
        Level::Quick => vec!["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "E6"],
        Level::Full => vec![
            "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "C2", "C3", "C4",
            "D4", "D5", "F4", "G2", "E6", "E7", "E8",
        ],
    }
}

/// Rank at or below which checks quantify over whole groups or all subsets.
fn exhaustive_rank(level: Level) -> usize {
    match level {
        Level::Quick => 3,
        Level::Full => 4,
    }
}

pub fn run(level: Level) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let exhaustive = exhaustive_rank(level);
    for label in labels(level) {
        let rs = RootSystem::new(label.parse::<LieType>().expect("built-in label"));
        let mut checks: Vec<(&str, Check)> = vec![
            ("root-count", check_root_count),
            ("cartan", check_cartan),
            ("poset-rank", check_poset_rank),
            ("reflection-permutes", check_reflections),
            ("height-histogram", check_histogram),
            ("longest-inversions", check_longest_inversions),
            ("monk-height-sum", check_monk_sum),
            ("coxeter-reduced-words", check_coxeter_words),
            ("giambelli-identity", check_giambelli_identity),
        ];
        if rs.rank() <= exhaustive {
            checks.push(("act-composition", check_act_composition));
            checks.push(("reduced-words-consistent", check_reduced_words));
            checks.push(("dp-vs-oracle", check_oracle_equivalence));
            checks.push(("word-independence", check_word_independence));
            checks.push(("support", check_support));
            checks.push(("structure-constants", check_structure_constants));
        }
        if label.starts_with('E') {
            checks.push(("e-type-oracle", check_e_oracle));
        }
        if label == "E6" {
            checks.push(("structure-constants-spot", check_e6_constants));
        }
        for (name, check) in checks {
            let (passed, detail) = match check(&rs) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            out.push(CheckOutcome {
                name: format!("{label}/{name}"),
                passed,
                detail,
            });
        }
    }
    out
}

fn full_longest(rs: &RootSystem) -> Word {
    longest_element_word(rs, SimpleSubset::full(rs.rank()))
}

fn check_root_count(rs: &RootSystem) -> Result<String, String> {
    let got = rs.positives().len();
    let want = rs.label().positive_root_count();
    if got == want {
        Ok(format!("{got} positive roots"))
    } else {
        Err(format!("generated {got}, expected {want}"))
    }
}

fn check_cartan(rs: &RootSystem) -> Result<String, String> {
    for (i, row) in rs.cartan().iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if (i == j && a != 2) || (i != j && a > 0) {
                return Err(format!("cartan[{}][{}] = {a}", i + 1, j + 1));
            }
        }
    }
    Ok("diagonal 2, off-diagonal <= 0".into())
}

fn check_poset_rank(rs: &RootSystem) -> Result<String, String> {
    for (lo, up) in rs.root_poset_covers() {
        if up.height().unwrap() != lo.height().unwrap() + 1 {
            return Err(format!("cover {lo} < {up} is not graded"));
        }
    }
    for (r, rank) in rs.positives().iter().zip(rs.poset_ranks()) {
        if rank + 1 != r.height().unwrap() as usize {
            return Err(format!("{r}: poset rank {rank}"));
        }
    }
    Ok("rank = height - 1".into())
}

fn check_reflections(rs: &RootSystem) -> Result<String, String> {
    let n = rs.rank();
    for i in 1..=n {
        let simple = Root::simple(n, i);
        let others: HashSet<&Root> = rs.positives().iter().filter(|r| **r != simple).collect();
        let mut images = HashSet::new();
        for r in &others {
            let img = rs.reflect(i, r).unwrap();
            if rs.reflect(i, &img).unwrap() != **r {
                return Err(format!("s{i} is not an involution on {r}"));
            }
            images.insert(img);
        }
        if images.iter().collect::<HashSet<_>>() != others {
            return Err(format!("s{i} does not permute the positive roots other than a{i}"));
        }
        if rs.reflect(i, &simple).unwrap() != simple.negated() {
            return Err(format!("s{i} does not negate a{i}"));
        }
    }
    Ok(format!("{n} reflections"))
}

fn check_histogram(rs: &RootSystem) -> Result<String, String> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for r in rs.positives() {
        *counts.entry(r.height().unwrap()).or_default() += 1;
    }
    let v: Vec<usize> = counts.values().copied().collect();
    if v.windows(2).all(|p| p[0] >= p[1]) {
        Ok(format!("{v:?}"))
    } else {
        Err(format!("histogram {v:?} increases"))
    }
}

fn check_longest_inversions(rs: &RootSystem) -> Result<String, String> {
    let subsets: Vec<SimpleSubset> = if rs.rank() <= 4 {
        SimpleSubset::all(rs.rank()).collect()
    } else {
        vec![SimpleSubset::full(rs.rank())]
    };
    for j in &subsets {
        let word = longest_element_word(rs, *j);
        let roots = inversion_roots(rs, &word).map_err(|e| e.to_string())?;
        let got: HashSet<Root> = roots.iter().cloned().collect();
        let want: HashSet<Root> = rs.positives_supported_on(j.mask()).cloned().collect();
        if got.len() != roots.len() || got != want {
            return Err(format!("inversion set of w_J for J = {j} differs from Φ+_J"));
        }
        let w = element(rs, &word).unwrap();
        if let Some(k) = j.indices().into_iter().find(|&k| !w.has_right_descent(k)) {
            return Err(format!("w_J for J = {j} lacks the descent {k}"));
        }
    }
    Ok(format!("{} subsets", subsets.len()))
}

fn check_monk_sum(rs: &RootSystem) -> Result<String, String> {
    let full = SimpleSubset::full(rs.rank());
    let mut total = BigUint::zero();
    for i in 1..=rs.rank() {
        let m = monk_eval(rs, i, full).map_err(|e| e.to_string())?;
        let via_dp = billey_eval_dp(rs, &Word::new(vec![i]), &full_longest(rs))
            .map_err(|e| e.to_string())?;
        if m != via_dp {
            return Err(format!("monk({i}) = {m} but DP gives {via_dp}"));
        }
        total += m.coeff;
    }
    if total == BigUint::from(rs.height_sum()) {
        Ok(format!("sum {total}"))
    } else {
        Err(format!("sum {total}, height sum {}", rs.height_sum()))
    }
}

fn check_coxeter_words(rs: &RootSystem) -> Result<String, String> {
    let v = Word::new((1..=rs.rank()).collect());
    let words = reduced_words(rs, &v).map_err(|e| e.to_string())?;
    consistent_words(rs, &words)?;
    if rs.label().family() == crate::rootsys::Family::E && words.len() != 3 {
        return Err(format!("|R(v_K)| = {}, expected 3", words.len()));
    }
    Ok(format!("|R(v_K)| = {}", words.len()))
}

fn consistent_words(rs: &RootSystem, words: &[Word]) -> Result<(), String> {
    let distinct: HashSet<&Word> = words.iter().collect();
    if distinct.len() != words.len() {
        return Err("duplicate reduced words".into());
    }
    let elements: HashSet<_> = words.iter().map(|u| element(rs, u).unwrap()).collect();
    if elements.len() > 1 {
        return Err("reduced words name different elements".into());
    }
    if let Some(u) = words.iter().find(|u| !is_reduced(rs, u).unwrap()) {
        return Err(format!("{u} is not reduced"));
    }
    Ok(())
}

fn check_giambelli_identity(rs: &RootSystem) -> Result<String, String> {
    let subsets: Vec<SimpleSubset> = if rs.rank() <= 4 {
        SimpleSubset::all(rs.rank()).skip(1).collect()
    } else {
        vec![SimpleSubset::full(rs.rank())]
    };
    let points = FixedPoints::new(rs).map_err(|e| e.to_string())?;
    for k in subsets {
        let ratio = giambelli_ratio(rs, k).map_err(|e| e.to_string())?;
        for j in SimpleSubset::all(rs.rank()).filter(|j| j.is_subset_of(&k)) {
            let product = k
                .indices()
                .into_iter()
                .fold(BigUint::from(1u32), |acc, i| acc * points.monk_at(i, j).coeff);
            let lhs = BigRational::from_integer(product.into());
            let rhs = &ratio * BigRational::from_integer(points.class_at(k, j).coeff.into());
            if lhs != rhs {
                return Err(format!("K = {k}, J = {j}: {lhs} != {rhs}"));
            }
        }
        if rs.label().family() == crate::rootsys::Family::A && is_interval(&k) {
            let factorial: u64 = (1..=k.len() as u64).product();
            if ratio != BigRational::from_integer(factorial.into()) {
                return Err(format!("type A ratio for {k} is {ratio}, expected {factorial}"));
            }
        }
    }
    Ok("holds on every J ⊆ K".into())
}

fn is_interval(k: &SimpleSubset) -> bool {
    let idx = k.indices();
    idx.windows(2).all(|p| p[1] == p[0] + 1)
}

fn check_act_composition(rs: &RootSystem) -> Result<String, String> {
    let elements = elements_up_to(rs, usize::MAX);
    for (_, w1) in elements.iter().step_by(3) {
        for (_, w2) in elements.iter().step_by(5) {
            let joined = w1.concat(w2);
            for r in rs.positives() {
                let direct = act(rs, &joined, r).unwrap();
                let nested = act(rs, w1, &act(rs, w2, r).unwrap()).unwrap();
                if direct != nested {
                    return Err(format!("act({joined}) differs on {r}"));
                }
            }
        }
    }
    Ok("act(w1 w2) = act(w1) act(w2)".into())
}

fn check_reduced_words(rs: &RootSystem) -> Result<String, String> {
    let mut total = 0;
    for (w, word) in elements_up_to(rs, usize::MAX) {
        let words = reduced_words(rs, &word).map_err(|e| e.to_string())?;
        consistent_words(rs, &words)?;
        if element(rs, &words[0]).unwrap() != w {
            return Err(format!("reduced words of {word} name another element"));
        }
        total += words.len();
    }
    Ok(format!("{total} reduced words"))
}

fn check_oracle_equivalence(rs: &RootSystem) -> Result<String, String> {
    let elements = elements_up_to(rs, 12);
    let mut pairs = 0;
    for (_, v) in &elements {
        for (_, w) in &elements {
            let dp = billey_eval_dp(rs, v, w).map_err(|e| e.to_string())?;
            let bf = billey_eval_bruteforce(rs, v, w, None).map_err(|e| e.to_string())?;
            if dp != bf {
                return Err(format!("v = {v}, w = {w}: DP {dp}, oracle {bf}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn check_word_independence(rs: &RootSystem) -> Result<String, String> {
    let elements = elements_up_to(rs, usize::MAX);
    for (_, w) in &elements {
        let all = reduced_words(rs, w).map_err(|e| e.to_string())?;
        let mut reference: Option<Vec<_>> = None;
        for alt in &all {
            let values: Vec<_> = elements
                .iter()
                .map(|(_, v)| billey_eval_dp(rs, v, alt).unwrap())
                .collect();
            match &reference {
                None => reference = Some(values),
                Some(r) if *r != values => {
                    return Err(format!("evaluations at {w} depend on the word ({alt})"));
                }
                Some(_) => {}
            }
        }
    }
    Ok(format!("{} elements", elements.len()))
}

fn check_support(rs: &RootSystem) -> Result<String, String> {
    let elements = elements_up_to(rs, usize::MAX);
    for (_, v) in &elements {
        let patterns = reduced_words(rs, v).unwrap();
        for (_, w) in &elements {
            let value = billey_eval_dp(rs, v, w).unwrap();
            let embeds = patterns.iter().any(|u| is_subsequence(u.letters(), w.letters()));
            if value.is_zero() == embeds || (v.len() > w.len() && !value.is_zero()) {
                return Err(format!("support mismatch for v = {v}, w = {w}"));
            }
        }
    }
    Ok("nonzero iff a reduced word of v embeds".into())
}

fn is_subsequence(pattern: &[usize], text: &[usize]) -> bool {
    let mut it = text.iter();
    pattern.iter().all(|p| it.any(|t| t == p))
}

fn check_structure_constants(rs: &RootSystem) -> Result<String, String> {
    let points = FixedPoints::new(rs).map_err(|e| e.to_string())?;
    let mut solved = 0;
    for i in 1..=rs.rank() {
        for k in SimpleSubset::all(rs.rank()) {
            let c = monk_structure_constants_with(&points, i, k).map_err(|e| e.to_string())?;
            let bad = structure_constant_residuals(&points, i, k, &c)
                .into_iter()
                .find(|(_, r)| !r.is_zero());
            if let Some((j, r)) = bad {
                return Err(format!("i = {i}, K = {k}: residual {r} at J = {j}"));
            }
            solved += 1;
        }
    }
    Ok(format!("{solved} products, zero residual"))
}

fn check_e6_constants(rs: &RootSystem) -> Result<String, String> {
    let points = FixedPoints::new(rs).map_err(|e| e.to_string())?;
    let k = SimpleSubset::from_indices(rs, &[1, 3, 4]).unwrap();
    let c = monk_structure_constants_with(&points, 2, k).map_err(|e| e.to_string())?;
    let residuals = structure_constant_residuals(&points, 2, k, &c);
    if residuals.iter().all(|(_, r)| r.is_zero()) {
        Ok(format!("{} terms over {} fixed points", c.len(), residuals.len()))
    } else {
        Err("nonzero residual".into())
    }
}

fn check_e_oracle(rs: &RootSystem) -> Result<String, String> {
    let w0 = full_longest(rs);
    let alt = w0.reversed();
    let v = Word::new((1..=rs.rank()).collect());
    let dp = billey_eval_dp(rs, &v, &w0).map_err(|e| e.to_string())?;
    let window = sound_window(rs, &v, &w0).map_err(|e| e.to_string())?;
    let bf = billey_eval_bruteforce(rs, &v, &w0, Some(window)).map_err(|e| e.to_string())?;
    let dp_alt = billey_eval_dp(rs, &v, &alt).map_err(|e| e.to_string())?;
    for i in 1..=rs.rank() {
        let canonical = monk_eval(rs, i, SimpleSubset::full(rs.rank())).unwrap();
        if monk_eval_at(rs, i, &alt).unwrap() != canonical {
            return Err(format!("monk({i}) depends on the word"));
        }
    }
    if dp == bf && dp == dp_alt {
        Ok(format!("p_v(w_0) = {dp}, window {window}"))
    } else {
        Err(format!("DP {dp}, oracle {bf}, reversed word {dp_alt}"))
    }
}
