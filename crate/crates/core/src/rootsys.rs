//! Finite crystallographic root systems.
//!
//! Everything is expressed in the simple-root basis `α_1..α_n`, numbered as in
//! Bourbaki. The Cartan matrix convention is `cartan[i][j] = ⟨α_j, α_i^∨⟩`, so
//! the simple reflection `σ_i` sends `α_j` to `α_j − cartan[i][j]·α_i`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest rank accepted for any family. Parabolic subsets are stored as
/// 64-bit masks.
pub const MAX_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A family letter plus rank, e.g. `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reject = |reason: &str| Error::InvalidLabel {
            label: format!("{}{}", family.letter(), rank),
            reason: reason.to_string(),
        };
        if rank > MAX_RANK {
            return Err(reject("rank exceeds the supported maximum of 64"));
        }
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(reject(match family {
                Family::A => "type A requires rank n >= 1",
                Family::B => "type B requires rank n >= 2",
                Family::C => "type C requires rank n >= 2",
                Family::D => "type D requires rank n >= 3",
                Family::E => "type E requires rank 6, 7 or 8",
                Family::F => "type F requires rank 4",
                Family::G => "type G requires rank 2",
            }));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B, _) | (Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Symmetrized form: squared lengths of the simple roots and the nonzero
    /// off-diagonal inner products `(i, j, (α_i, α_j))`, zero-based.
    fn gram_data(&self) -> (Vec<i32>, Vec<(usize, usize, i32)>) {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1, -1));
        match self.family {
            Family::A => (vec![2; n], chain(n).collect()),
            Family::B => {
                let mut lens = vec![2; n];
                lens[n - 1] = 1;
                (lens, chain(n).collect())
            }
            Family::C => {
                let mut lens = vec![2; n];
                lens[n - 1] = 4;
                let mut edges: Vec<_> = chain(n - 1).collect();
                edges.push((n - 2, n - 1, -2));
                (lens, edges)
            }
            Family::D => {
                let mut edges: Vec<_> = chain(n - 1).collect();
                edges.push((n - 3, n - 1, -1));
                (vec![2; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2, -1), (1, 3, -1)];
                edges.extend((2..n - 1).map(|i| (i, i + 1, -1)));
                (vec![2; n], edges)
            }
            Family::F => (vec![4, 4, 2, 2], vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)]),
            Family::G => (vec![2, 6], vec![(0, 1, -3)]),
        }
    }

    /// Cartan matrix with `cartan[i][j] = ⟨α_j, α_i^∨⟩ = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let (lens, edges) = self.gram_data();
        let mut gram = vec![vec![0i32; n]; n];
        for (i, len) in lens.iter().enumerate() {
            gram[i][i] = *len;
        }
        for (i, j, ip) in edges {
            gram[i][j] = ip;
            gram[j][i] = ip;
        }
        (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let reject = |reason: &str| Error::InvalidLabel {
            label: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(reject("family must be one of A, B, C, D, E, F, G")),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| reject("rank must be a positive integer"))?;
        LieType::new(family, rank)
    }
}

/// A vector of integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// `α_i` (1-based) in a system of the given rank.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i - 1] = 1;
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    /// Coefficient sum of a positive root.
    pub fn height(&self) -> Result<u32> {
        if !self.is_positive() {
            return Err(Error::NotPositive {
                root: self.to_string(),
            });
        }
        Ok(self.0.iter().sum::<i32>() as u32)
    }

    /// Indices (1-based) with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An immutable root system with its positive roots in canonical order
/// (by height, then lexicographically by coefficients).
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: LieType,
    cartan: Vec<Vec<i32>>,
    positives: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    /// Builds the system and generates `Φ+` by reflection closure from the
    /// simple roots.
    pub fn new(label: LieType) -> Self {
        let cartan = label.cartan_matrix();
        let n = label.rank();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 1..=n {
            let a = Root::simple(n, i);
            seen.insert(a.clone());
            queue.push_back(a);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let image = reflect_raw(&cartan, i, &beta);
                if image.is_positive() && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positives: Vec<Root> = seen.into_iter().collect();
        positives.sort_by(|a, b| {
            let ha: i32 = a.0.iter().sum();
            let hb: i32 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let index = positives
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        RootSystem {
            label,
            cartan,
            positives,
            index,
        }
    }

    pub fn label(&self) -> LieType {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positives(&self) -> &[Root] {
        &self.positives
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_generator(i)?;
        Ok(Root::simple(self.rank(), i))
    }

    /// Position of a positive root in the canonical order.
    pub fn position(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, root: &Root) -> bool {
        self.index.contains_key(root) || self.index.contains_key(&root.negated())
    }

    pub fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn height(&self, root: &Root) -> Result<u32> {
        root.height()
    }

    /// `σ_i(root)` for a 1-based generator index.
    pub fn reflect(&self, i: usize, root: &Root) -> Result<Root> {
        self.check_generator(i)?;
        Ok(reflect_raw(&self.cartan, i - 1, root))
    }

    /// All pairs `(lower, upper)` of positive roots with `upper − lower`
    /// a simple root.
    pub fn root_poset_covers(&self) -> Vec<(Root, Root)> {
        let mut covers = Vec::new();
        for lower in &self.positives {
            for i in 0..self.rank() {
                let mut up = lower.0.clone();
                up[i] += 1;
                let up = Root(up);
                if self.index.contains_key(&up) {
                    covers.push((lower.clone(), up));
                }
            }
        }
        covers
    }

    /// Longest cover-chain distance from a simple root, for each positive
    /// root in canonical order.
    pub fn poset_ranks(&self) -> Vec<usize> {
        let mut rank = vec![0usize; self.positives.len()];
        let mut reached = vec![false; self.positives.len()];
        for (k, r) in self.positives.iter().enumerate() {
            if r.0.iter().sum::<i32>() == 1 {
                reached[k] = true;
            }
        }
        // Covers go from lower to strictly higher canonical position.
        let mut covers = self.root_poset_covers();
        covers.sort_by_key(|(lo, _)| self.index[lo]);
        for (lo, up) in covers {
            let (l, u) = (self.index[&lo], self.index[&up]);
            if reached[l] {
                rank[u] = rank[u].max(rank[l] + 1);
                reached[u] = true;
            }
        }
        rank
    }

    /// The unique positive root of maximal height.
    pub fn highest_root(&self) -> Root {
        self.positives
            .last()
            .cloned()
            .expect("a root system has at least one positive root")
    }

    /// Positive roots whose support lies in `mask` (bit `i-1` for `α_i`).
    pub fn positives_supported_on(&self, mask: u64) -> impl Iterator<Item = &Root> + '_ {
        self.positives
            .iter()
            .filter(move |r| r.support().all(|i| mask & (1 << (i - 1)) != 0))
    }

    /// Height of every positive root, summed.
    pub fn height_sum(&self) -> u64 {
        self.positives
            .iter()
            .map(|r| r.0.iter().sum::<i32>() as u64)
            .sum()
    }
}

pub(crate) fn reflect_raw(cartan: &[Vec<i32>], i: usize, root: &Root) -> Root {
    let pairing: i32 = cartan[i]
        .iter()
        .zip(&root.0)
        .map(|(a, c)| a * c)
        .sum();
    let mut out = root.0.clone();
    out[i] -= pairing;
    Root(out)
}
