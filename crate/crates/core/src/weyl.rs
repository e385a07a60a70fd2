//! Weyl group elements, their words, and reduced-word combinatorics.
//!
//! Words are the external currency: a [`Word`] `(j_1, …, j_l)` denotes the
//! product `s_{j_1}⋯s_{j_l}`, acting on roots on the left. Internally an
//! element is a [`WeylElement`], the integer matrix of its action on the
//! simple-root basis, which makes composition and descent tests exact.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Guard for [`reduced_words`].
pub const REDUCED_WORD_LIMIT: usize = 1_000_000;

/// A sequence of 1-based generator indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        self.0.iter().try_for_each(|&j| rs.check_generator(j))
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, j) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated list such as `1,3,2` (parentheses optional).
impl FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("`{}` is not a generator index", t.trim()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// A subset of the simple reflections, stored as a bit mask (bit `i-1` for
/// generator `i`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset(u64);

impl SimpleSubset {
    pub fn from_indices(rs: &RootSystem, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in indices {
            rs.check_generator(i)?;
            mask |= 1 << (i - 1);
        }
        Ok(SimpleSubset(mask))
    }

    pub fn from_mask(mask: u64) -> Self {
        SimpleSubset(mask)
    }

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            SimpleSubset(u64::MAX)
        } else {
            SimpleSubset((1u64 << rank) - 1)
        }
    }

    pub fn empty() -> Self {
        SimpleSubset(0)
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: &SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Indices in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        (1..=64).filter(|&i| self.contains(i)).collect()
    }

    /// Every subset of `{1..rank}`, in increasing mask order.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSubset> {
        let full = Self::full(rank).0;
        (0..=full).map(SimpleSubset)
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A group element as its action on the simple roots: column `j` holds
/// the coefficients of `w(α_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    cols: Vec<i32>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut cols = vec![0; rank * rank];
        for j in 0..rank {
            cols[j * rank + j] = 1;
        }
        WeylElement { rank, cols }
    }

    fn column(&self, j: usize) -> &[i32] {
        &self.cols[j * self.rank..(j + 1) * self.rank]
    }

    /// `w(α_j)` for a 1-based index.
    pub fn image_of_simple(&self, j: usize) -> Root {
        Root::new(self.column(j - 1).to_vec())
    }

    pub fn apply(&self, root: &Root) -> Root {
        let n = self.rank;
        let mut out = vec![0i32; n];
        for (k, &c) in root.coeffs().iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(self.column(k)) {
                    *o += c * x;
                }
            }
        }
        Root::new(out)
    }

    /// True when `ℓ(w·s_j) < ℓ(w)`, i.e. `w(α_j)` is negative.
    pub fn has_right_descent(&self, j: usize) -> bool {
        self.column(j - 1).iter().any(|&c| c < 0)
    }

    /// `w·s_j`.
    pub fn times_simple(&self, rs: &RootSystem, j: usize) -> WeylElement {
        let n = self.rank;
        let row = &rs.cartan()[j - 1];
        let pivot = self.column(j - 1).to_vec();
        let mut cols = self.cols.clone();
        for (k, &a) in row.iter().enumerate() {
            if a != 0 {
                for (x, p) in cols[k * n..(k + 1) * n].iter_mut().zip(&pivot) {
                    *x -= a * p;
                }
            }
        }
        WeylElement { rank: n, cols }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positives()
            .iter()
            .filter(|r| self.apply(r).is_negative())
            .count()
    }
}

/// The element `s_{j_1}⋯s_{j_l}` of a word.
pub fn element(rs: &RootSystem, word: &Word) -> Result<WeylElement> {
    word.check(rs)?;
    Ok(word
        .letters()
        .iter()
        .fold(WeylElement::identity(rs.rank()), |w, &j| {
            w.times_simple(rs, j)
        }))
}

/// `s_{j_1}(s_{j_2}(⋯s_{j_l}(root)⋯))`.
pub fn act(rs: &RootSystem, word: &Word, root: &Root) -> Result<Root> {
    word.check(rs)?;
    word.letters()
        .iter()
        .rev()
        .try_fold(root.clone(), |beta, &j| rs.reflect(j, &beta))
}

/// All inversion roots `r(i, w) = s_{j_1}⋯s_{j_{i−1}}(α_{j_i})`, rejecting
/// the word at the first negative one.
pub fn inversion_roots(rs: &RootSystem, word: &Word) -> Result<Vec<Root>> {
    word.check(rs)?;
    let mut prefix = WeylElement::identity(rs.rank());
    let mut roots = Vec::with_capacity(word.len());
    for (pos, &j) in word.letters().iter().enumerate() {
        let root = prefix.image_of_simple(j);
        if !root.is_positive() {
            return Err(Error::NotReduced {
                word: word.to_string(),
                position: pos + 1,
            });
        }
        roots.push(root);
        prefix = prefix.times_simple(rs, j);
    }
    Ok(roots)
}

/// The inversion root at 1-based position `i` of a reduced word.
pub fn inversion_root(rs: &RootSystem, word: &Word, i: usize) -> Result<Root> {
    if i == 0 || i > word.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: word.len(),
        });
    }
    let mut roots = inversion_roots(rs, word)?;
    Ok(roots.swap_remove(i - 1))
}

pub fn is_reduced(rs: &RootSystem, word: &Word) -> Result<bool> {
    match inversion_roots(rs, word) {
        Ok(_) => Ok(true),
        Err(Error::NotReduced { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Reduced word of the longest element `w_J` of the parabolic subgroup on
/// `J`, built by appending the smallest length-increasing generator of `J`
/// until none is left.
pub fn longest_element_word(rs: &RootSystem, subset: SimpleSubset) -> Word {
    let generators: Vec<usize> = subset
        .indices()
        .into_iter()
        .filter(|&j| j <= rs.rank())
        .collect();
    let mut w = WeylElement::identity(rs.rank());
    let mut letters = Vec::new();
    while let Some(&j) = generators.iter().find(|&&j| !w.has_right_descent(j)) {
        letters.push(j);
        w = w.times_simple(rs, j);
    }
    Word(letters)
}

/// All reduced words of the element represented by `word`, sorted
/// lexicographically.
pub fn reduced_words(rs: &RootSystem, word: &Word) -> Result<Vec<Word>> {
    reduced_words_limited(rs, word, REDUCED_WORD_LIMIT)
}

pub fn reduced_words_limited(rs: &RootSystem, word: &Word, limit: usize) -> Result<Vec<Word>> {
    if !is_reduced(rs, word)? {
        let position = inversion_roots(rs, word)
            .err()
            .and_then(|e| match e {
                Error::NotReduced { position, .. } => Some(position),
                _ => None,
            })
            .unwrap_or(0);
        return Err(Error::NotReduced {
            word: word.to_string(),
            position,
        });
    }
    let w = element(rs, word)?;
    let mut out = Vec::new();
    let mut suffix = Vec::with_capacity(word.len());
    collect_words(rs, &w, &mut suffix, &mut out, limit)?;
    out.sort();
    Ok(out)
}

// Peels right descents off `w`; `suffix` holds the removed letters in
// reverse order.
fn collect_words(
    rs: &RootSystem,
    w: &WeylElement,
    suffix: &mut Vec<usize>,
    out: &mut Vec<Word>,
    limit: usize,
) -> Result<()> {
    let mut any = false;
    for j in 1..=rs.rank() {
        if w.has_right_descent(j) {
            any = true;
            suffix.push(j);
            collect_words(rs, &w.times_simple(rs, j), suffix, out, limit)?;
            suffix.pop();
        }
    }
    if !any {
        if out.len() == limit {
            return Err(Error::TooManyReducedWords { limit });
        }
        out.push(Word(suffix.iter().rev().copied().collect()));
    }
    Ok(())
}

/// Every group element of length at most `max_len`, each with its
/// lexicographically first reduced word, in order of length.
pub fn elements_up_to(rs: &RootSystem, max_len: usize) -> Vec<(WeylElement, Word)> {
    let id = WeylElement::identity(rs.rank());
    let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
    let mut out = vec![(id.clone(), Word::empty())];
    let mut queue = VecDeque::from([(id, Word::empty())]);
    while let Some((w, word)) = queue.pop_front() {
        if word.len() == max_len {
            continue;
        }
        for j in 1..=rs.rank() {
            if w.has_right_descent(j) {
                continue;
            }
            let next = w.times_simple(rs, j);
            if seen.insert(next.clone()) {
                let mut letters = word.0.clone();
                letters.push(j);
                let next_word = Word(letters);
                out.push((next.clone(), next_word.clone()));
                queue.push_back((next, next_word));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(letters: &[usize]) -> Word {
        Word::new(letters.to_vec())
    }

    fn r(c: &[i32]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn act_on_roots() {
        let a2 = sys("A2");
        assert_eq!(act(&a2, &Word::empty(), &r(&[1, 0])).unwrap(), r(&[1, 0]));
        assert_eq!(act(&a2, &w(&[1]), &r(&[0, 1])).unwrap(), r(&[1, 1]));
        assert_eq!(act(&a2, &w(&[1, 2]), &r(&[1, 0])).unwrap(), r(&[0, 1]));
        assert!(act(&a2, &w(&[3]), &r(&[1, 0])).is_err());
    }

    #[test]
    fn a2_inversion_roots() {
        let a2 = sys("A2");
        let word = w(&[1, 2, 1]);
        assert_eq!(inversion_root(&a2, &word, 1).unwrap(), r(&[1, 0]));
        assert_eq!(inversion_root(&a2, &word, 2).unwrap(), r(&[1, 1]));
        assert_eq!(inversion_root(&a2, &word, 3).unwrap(), r(&[0, 1]));
        assert!(matches!(
            inversion_root(&a2, &word, 4),
            Err(Error::PositionOutOfRange { position: 4, len: 3 })
        ));
        assert!(matches!(
            inversion_root(&a2, &w(&[1, 2, 1, 2]), 1),
            Err(Error::NotReduced { position: 4, .. })
        ));
    }

    #[test]
    fn reducedness() {
        let a2 = sys("A2");
        assert!(!is_reduced(&a2, &w(&[1, 1])).unwrap());
        assert!(is_reduced(&a2, &w(&[1, 2, 1])).unwrap());
        assert!(!is_reduced(&a2, &w(&[1, 2, 1, 2])).unwrap());
        assert!(is_reduced(&a2, &Word::empty()).unwrap());
        assert!(is_reduced(&a2, &w(&[0])).is_err());
    }

    #[test]
    fn longest_words() {
        let a2 = sys("A2");
        for n in 1..=2 {
            assert_eq!(
                longest_element_word(&a2, SimpleSubset::from_indices(&a2, &[n]).unwrap()),
                w(&[n])
            );
        }
        assert_eq!(longest_element_word(&a2, SimpleSubset::full(2)), w(&[1, 2, 1]));
        assert_eq!(longest_element_word(&a2, SimpleSubset::empty()), Word::empty());
        for (label, len) in [("E6", 36), ("E7", 63), ("E8", 120)] {
            let rs = sys(label);
            assert_eq!(longest_element_word(&rs, SimpleSubset::full(rs.rank())).len(), len);
        }
    }

    #[test]
    fn a2_reduced_words() {
        let a2 = sys("A2");
        assert_eq!(reduced_words(&a2, &Word::empty()).unwrap(), vec![Word::empty()]);
        assert_eq!(
            reduced_words(&a2, &w(&[2, 1, 2])).unwrap(),
            vec![w(&[1, 2, 1]), w(&[2, 1, 2])]
        );
        assert!(reduced_words(&a2, &w(&[1, 1])).is_err());
    }

    #[test]
    fn reduced_word_guard() {
        let b3 = sys("B3");
        let w0 = longest_element_word(&b3, SimpleSubset::full(3));
        assert_eq!(reduced_words(&b3, &w0).unwrap().len(), 42);
        assert_eq!(
            reduced_words_limited(&b3, &w0, 41),
            Err(Error::TooManyReducedWords { limit: 41 })
        );
    }

    #[test]
    fn e8_coxeter_element_words() {
        let e8 = sys("E8");
        let words = reduced_words(&e8, &w(&[1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert_eq!(
            words,
            vec![
                w(&[1, 2, 3, 4, 5, 6, 7, 8]),
                w(&[1, 3, 2, 4, 5, 6, 7, 8]),
                w(&[2, 1, 3, 4, 5, 6, 7, 8]),
            ]
        );
    }

    #[test]
    fn group_orders() {
        for (label, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("G2", 12)] {
            let rs = sys(label);
            assert_eq!(elements_up_to(&rs, usize::MAX).len(), order, "{label}");
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!("1, 3,2".parse::<Word>().unwrap(), w(&[1, 3, 2]));
        assert_eq!("(1,2)".parse::<Word>().unwrap(), w(&[1, 2]));
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert!("1,x".parse::<Word>().is_err());
    }
}
