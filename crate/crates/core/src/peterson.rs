//! Monk and Giambelli evaluations on the fixed points of the Peterson
//! variety.
//!
//! Fixed points are indexed by subsets `J` of the simple reflections, with
//! representative `w_J`, the longest element of the parabolic subgroup on
//! `J`. The classes of interest are `p_{v_K}`, where `v_K` is the Coxeter
//! element of `K` (each generator of `K` once, in increasing order).
//! Every evaluation is a monomial in `t`, carried as a [`LocalizationValue`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::billey::{billey_eval_dp, inversion_heights, weighted_subsequence_sum, LocalizationValue};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::{longest_element_word, reduced_words, SimpleSubset, Word};

/// Increasing-index word of a nonempty subset.
pub fn coxeter_word(subset: SimpleSubset) -> Result<Word> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(Word::new(subset.indices()))
}

// Like `coxeter_word` but maps the empty subset to the identity.
fn class_word(subset: SimpleSubset) -> Word {
    Word::new(subset.indices())
}

/// `p_{s_i}` at the point whose representative is `w`, given by a reduced
/// word: `t` times the sum of the inversion heights at the positions of
/// `w` carrying the letter `i`.
pub fn monk_eval_at(rs: &RootSystem, i: usize, w: &Word) -> Result<LocalizationValue> {
    rs.check_generator(i)?;
    let heights = inversion_heights(rs, w)?;
    let sum: u64 = w
        .letters()
        .iter()
        .zip(&heights)
        .filter(|(&j, _)| j == i)
        .map(|(_, &h)| h as u64)
        .sum();
    Ok(LocalizationValue::new(BigUint::from(sum), 1))
}

/// `p_{s_i}(w_J)`.
pub fn monk_eval(rs: &RootSystem, i: usize, subset: SimpleSubset) -> Result<LocalizationValue> {
    monk_eval_at(rs, i, &longest_element_word(rs, subset))
}

/// `p_{v_K}` at the point whose representative is `w`.
pub fn giambelli_eval_at(rs: &RootSystem, subset: SimpleSubset, w: &Word) -> Result<LocalizationValue> {
    billey_eval_dp(rs, &coxeter_word(subset)?, w)
}

/// `p_{v_K}(w_K)`.
pub fn giambelli_eval(rs: &RootSystem, subset: SimpleSubset) -> Result<LocalizationValue> {
    giambelli_eval_at(rs, subset, &longest_element_word(rs, subset))
}

/// `Π_{i∈K} p_{s_i}(w_K) / p_{v_K}(w_K)` as a reduced fraction.
pub fn giambelli_ratio(rs: &RootSystem, subset: SimpleSubset) -> Result<BigRational> {
    giambelli_ratio_at(rs, subset, &longest_element_word(rs, subset))
}

/// The same ratio computed from an arbitrary reduced word of `w_K`.
pub fn giambelli_ratio_at(rs: &RootSystem, subset: SimpleSubset, w: &Word) -> Result<BigRational> {
    let denominator = giambelli_eval_at(rs, subset, w)?.coeff;
    if denominator.is_zero() {
        return Err(Error::Invariant(format!(
            "p_v_K(w_K) vanishes for K = {subset}"
        )));
    }
    let mut numerator = BigUint::one();
    for i in subset.indices() {
        numerator *= monk_eval_at(rs, i, w)?.coeff;
    }
    Ok(BigRational::new(numerator.into(), denominator.into()))
}

/// Cached per-subset data: longest-element words and inversion heights for
/// each fixed point, reduced words of each Coxeter element.
#[derive(Debug, Clone)]
pub struct FixedPoints<'a> {
    rs: &'a RootSystem,
    longest: Vec<Word>,
    heights: Vec<Vec<u32>>,
    patterns: Vec<Vec<Word>>,
}

impl<'a> FixedPoints<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        let subsets: Vec<SimpleSubset> = SimpleSubset::all(rs.rank()).collect();
        let mut longest = Vec::with_capacity(subsets.len());
        let mut heights = Vec::with_capacity(subsets.len());
        let mut patterns = Vec::with_capacity(subsets.len());
        for &s in &subsets {
            let w = longest_element_word(rs, s);
            heights.push(inversion_heights(rs, &w)?);
            longest.push(w);
            patterns.push(reduced_words(rs, &class_word(s))?);
        }
        Ok(FixedPoints {
            rs,
            longest,
            heights,
            patterns,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn longest_word(&self, j: SimpleSubset) -> &Word {
        &self.longest[j.mask() as usize]
    }

    /// `p_{v_K}(w_J)`; `K = ∅` is the unit class.
    pub fn class_at(&self, k: SimpleSubset, j: SimpleSubset) -> LocalizationValue {
        let w = &self.longest[j.mask() as usize];
        let h = &self.heights[j.mask() as usize];
        let coeff = self.patterns[k.mask() as usize]
            .iter()
            .map(|u| weighted_subsequence_sum(w.letters(), h, u.letters()))
            .fold(BigUint::zero(), |a, b| a + b);
        LocalizationValue::new(coeff, k.len())
    }

    /// `p_{s_i}(w_J)`.
    pub fn monk_at(&self, i: usize, j: SimpleSubset) -> LocalizationValue {
        let w = &self.longest[j.mask() as usize];
        let h = &self.heights[j.mask() as usize];
        let sum: u64 = w
            .letters()
            .iter()
            .zip(h)
            .filter(|(&l, _)| l == i)
            .map(|(_, &x)| x as u64)
            .sum();
        LocalizationValue::new(BigUint::from(sum), 1)
    }
}

/// Evaluations `p_{v_{K'}}(w_J)` for all pairs with `K' ⊆ J`; entries with
/// `K' ⊄ J` vanish and are not stored.
#[derive(Debug, Clone)]
pub struct EvaluationTable {
    rank: usize,
    entries: BTreeMap<(SimpleSubset, SimpleSubset), LocalizationValue>,
}

impl EvaluationTable {
    pub fn build(points: &FixedPoints<'_>) -> Self {
        let rank = points.root_system().rank();
        let mut entries = BTreeMap::new();
        for j in SimpleSubset::all(rank) {
            for k in SimpleSubset::all(rank).filter(|k| k.is_subset_of(&j)) {
                entries.insert((k, j), points.class_at(k, j));
            }
        }
        EvaluationTable { rank, entries }
    }

    pub fn get(&self, class: SimpleSubset, point: SimpleSubset) -> LocalizationValue {
        self.entries
            .get(&(class, point))
            .cloned()
            .unwrap_or_else(|| LocalizationValue::zero(class.len()))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(SimpleSubset, SimpleSubset), &LocalizationValue)> {
        self.entries.iter()
    }
}

/// A coefficient `c` together with the power of `t` it multiplies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub t_exponent: usize,
}

/// Nonzero coefficients of `p_{s_i}·p_{v_K} = Σ c_{K'}·t^{1+|K|−|K'|}·p_{v_{K'}}`.
pub type StructureConstants = BTreeMap<SimpleSubset, Term>;

/// Solves for the Monk structure constants of `p_{s_i}·p_{v_K}` by
/// back-substitution over the fixed points `w_J`, in increasing subset
/// order. `K = ∅` stands for the unit class.
pub fn monk_structure_constants(
    rs: &RootSystem,
    i: usize,
    k: SimpleSubset,
) -> Result<StructureConstants> {
    let points = FixedPoints::new(rs)?;
    monk_structure_constants_with(&points, i, k)
}

pub fn monk_structure_constants_with(
    points: &FixedPoints<'_>,
    i: usize,
    k: SimpleSubset,
) -> Result<StructureConstants> {
    let rs = points.root_system();
    rs.check_generator(i)?;
    if !k.is_subset_of(&SimpleSubset::full(rs.rank())) {
        return Err(Error::GeneratorOutOfRange {
            index: k.indices().into_iter().max().unwrap_or(0),
            rank: rs.rank(),
        });
    }
    let target_degree = 1 + k.len();
    let mut solved: Vec<(SimpleSubset, BigRational)> = Vec::new();
    for j in SimpleSubset::all(rs.rank()) {
        let mut rhs = to_rational(&(points.monk_at(i, j).coeff * points.class_at(k, j).coeff));
        for (kp, c) in &solved {
            if kp.is_subset_of(&j) {
                rhs -= c * to_rational(&points.class_at(*kp, j).coeff);
            }
        }
        let diagonal = points.class_at(j, j).coeff;
        if diagonal.is_zero() {
            return Err(Error::Invariant(format!(
                "evaluation table has a zero diagonal entry at {j}"
            )));
        }
        let c = rhs / to_rational(&diagonal);
        if !c.is_zero() {
            solved.push((j, c));
        }
    }
    let mut out = StructureConstants::new();
    for (kp, coeff) in solved {
        if kp.len() > target_degree {
            return Err(Error::Invariant(format!(
                "class {kp} would need a negative power of t in the product"
            )));
        }
        out.insert(
            kp,
            Term {
                coeff,
                t_exponent: target_degree - kp.len(),
            },
        );
    }
    Ok(out)
}

/// `LHS − RHS` at every fixed point for a proposed expansion of
/// `p_{s_i}·p_{v_K}`; all zero when the expansion is correct.
pub fn structure_constant_residuals(
    points: &FixedPoints<'_>,
    i: usize,
    k: SimpleSubset,
    constants: &StructureConstants,
) -> Vec<(SimpleSubset, BigRational)> {
    let rank = points.root_system().rank();
    SimpleSubset::all(rank)
        .map(|j| {
            let lhs = to_rational(&(points.monk_at(i, j).coeff * points.class_at(k, j).coeff));
            let rhs = constants
                .iter()
                .map(|(kp, term)| &term.coeff * to_rational(&points.class_at(*kp, j).coeff))
                .fold(BigRational::zero(), |a, b| a + b);
            (j, lhs - rhs)
        })
        .collect()
}

fn to_rational(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn subset(rs: &RootSystem, idx: &[usize]) -> SimpleSubset {
        SimpleSubset::from_indices(rs, idx).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn term(c: i64, e: usize) -> Term {
        Term {
            coeff: rat(c),
            t_exponent: e,
        }
    }

    #[test]
    fn coxeter_words() {
        let a3 = sys("A3");
        assert_eq!(coxeter_word(subset(&a3, &[3])).unwrap(), Word::new(vec![3]));
        assert_eq!(coxeter_word(subset(&a3, &[3, 1])).unwrap(), Word::new(vec![1, 3]));
        assert_eq!(coxeter_word(SimpleSubset::empty()), Err(Error::EmptySubset));
        let e8 = sys("E8");
        assert_eq!(
            coxeter_word(SimpleSubset::full(8)).unwrap(),
            Word::new((1..=8).collect())
        );
        assert_eq!(e8.rank(), 8);
    }

    #[test]
    fn a2_values() {
        let a2 = sys("A2");
        let full = SimpleSubset::full(2);
        assert_eq!(monk_eval(&a2, 1, full).unwrap(), LocalizationValue::new(2u32.into(), 1));
        assert!(monk_eval(&a2, 1, subset(&a2, &[2])).unwrap().is_zero());
        assert_eq!(giambelli_eval(&a2, full).unwrap(), LocalizationValue::new(2u32.into(), 2));
        assert_eq!(giambelli_ratio(&a2, full).unwrap(), rat(2));
        assert!(monk_eval(&a2, 3, full).is_err());
    }

    #[test]
    fn singletons() {
        let b3 = sys("B3");
        for i in 1..=3 {
            let k = subset(&b3, &[i]);
            assert_eq!(giambelli_eval(&b3, k).unwrap(), LocalizationValue::new(1u32.into(), 1));
            assert_eq!(giambelli_ratio(&b3, k).unwrap(), rat(1));
        }
    }

    #[test]
    fn commuting_pair_ratio() {
        let a3 = sys("A3");
        assert_eq!(giambelli_ratio(&a3, subset(&a3, &[1, 3])).unwrap(), rat(1));
    }

    #[test]
    fn hand_structure_constants() {
        let a1 = sys("A1");
        let c = monk_structure_constants(&a1, 1, subset(&a1, &[1])).unwrap();
        assert_eq!(c, StructureConstants::from([(subset(&a1, &[1]), term(1, 1))]));

        let a2 = sys("A2");
        let c = monk_structure_constants(&a2, 1, subset(&a2, &[1])).unwrap();
        assert_eq!(
            c,
            StructureConstants::from([
                (subset(&a2, &[1]), term(1, 1)),
                (subset(&a2, &[1, 2]), term(1, 0)),
            ])
        );
        let c = monk_structure_constants(&a2, 1, subset(&a2, &[2])).unwrap();
        assert_eq!(c, StructureConstants::from([(subset(&a2, &[1, 2]), term(2, 0))]));
    }

    #[test]
    fn unit_class_expands_to_itself() {
        let g2 = sys("G2");
        let c = monk_structure_constants(&g2, 2, SimpleSubset::empty()).unwrap();
        assert_eq!(c, StructureConstants::from([(subset(&g2, &[2]), term(1, 0))]));
    }

    #[test]
    fn table_is_triangular() {
        let b2 = sys("B2");
        let points = FixedPoints::new(&b2).unwrap();
        let table = EvaluationTable::build(&points);
        for kp in SimpleSubset::all(2) {
            for j in SimpleSubset::all(2) {
                let direct = points.class_at(kp, j);
                assert_eq!(table.get(kp, j), direct);
                assert_eq!(direct.is_zero(), !kp.is_subset_of(&j), "{kp} at {j}");
            }
        }
    }

    #[test]
    fn exceptional_ratios() {
        for (label, expected) in [("F4", 24u32), ("E6", 240), ("E7", 1680), ("E8", 13440)] {
            let rs = sys(label);
            let ratio = giambelli_ratio(&rs, SimpleSubset::full(rs.rank())).unwrap();
            assert_eq!(ratio, BigRational::from_integer(expected.into()), "{label}");
        }
    }
}
