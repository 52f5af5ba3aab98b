use std::fmt;

use itertools::Itertools;

use super::jset::{AdmissibleSet, JElement};
use super::MatroidError;

/// A total order on `J` induced by a signed permutation `(i_1, ..., i_n)`:
///
/// `i_1 > i_2 > ... > i_n > i_n* > ... > i_1*`
///
/// The standard order `n > ... > 1 > 1* > ... > n*` is the signed
/// permutation `(n, n-1, ..., 1)`. There are `2^n n!` orderings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleOrdering {
    seq: Vec<JElement>,
    /// `rank[bit]` is the position of that element from the bottom, `0..2n`.
    rank: Vec<u8>,
}

impl AdmissibleOrdering {
    pub fn new(seq: Vec<JElement>) -> Result<Self, MatroidError> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for e in &seq {
            let i = e.index as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(MatroidError::BadOrdering(seq.iter().map(|e| e.to_string()).join(" ")));
            }
            seen[i - 1] = true;
        }
        Ok(Self::from_seq_unchecked(seq))
    }

    fn from_seq_unchecked(seq: Vec<JElement>) -> Self {
        let n = seq.len();
        let mut rank = vec![0u8; 2 * n];
        for (j, &e) in seq.iter().enumerate() {
            rank[e.bit() as usize] = (2 * n - 1 - j) as u8;
            rank[e.star().bit() as usize] = j as u8;
        }
        Self { seq, rank }
    }

    pub fn standard(n: usize) -> Self {
        Self::from_seq_unchecked((1..=n as u32).rev().map(JElement::plain).collect())
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn sequence(&self) -> &[JElement] {
        &self.seq
    }

    #[inline]
    pub fn rank_of(&self, e: JElement) -> u8 {
        self.rank[e.bit() as usize]
    }

    /// Ranks of the elements of `s`, ascending.
    pub(crate) fn sorted_ranks_into(&self, s: AdmissibleSet, out: &mut Vec<u8>) {
        out.clear();
        out.extend(s.elements().map(|e| self.rank_of(e)));
        out.sort_unstable();
    }

    /// Every admissible ordering for ground size `n`.
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        (1..=n as u32)
            .permutations(n)
            .flat_map(move |perm| (0..1u64 << n).map(move |signs| Self::for_permutation(&perm, signs)))
    }

    pub(crate) fn for_permutation(perm: &[u32], signs: u64) -> Self {
        Self::from_seq_unchecked(
            perm.iter().enumerate().map(|(j, &i)| JElement { index: i, starred: signs >> j & 1 == 1 }).collect(),
        )
    }
}

impl fmt::Display for AdmissibleOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self.seq.iter().map(|e| e.to_string()).collect();
        let bottom: Vec<String> = self.seq.iter().rev().map(|e| e.star().to_string()).collect();
        write!(f, "{} > {}", top.join(" > "), bottom.join(" > "))
    }
}

/// How `a` relates to `b` under the Gale order of an admissible ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    /// `a <= b` and `a != b`
    Below,
    /// `b <= a` and `a != b`
    Above,
    Equal,
    Incomparable,
}

/// Sorts both sets ascending under `w` and compares them slot by slot.
pub fn compare_under(a: AdmissibleSet, b: AdmissibleSet, w: &AdmissibleOrdering) -> Result<Dominance, MatroidError> {
    if a.len() != b.len() {
        return Err(MatroidError::UnequalSizes { left: a.len(), right: b.len() });
    }
    let bound = w.n() as u32;
    if a.max_index() > bound || b.max_index() > bound {
        return Err(MatroidError::OutsideGround { set: a.max(b).to_string(), n: w.n() });
    }
    let (mut ra, mut rb) = (Vec::new(), Vec::new());
    w.sorted_ranks_into(a, &mut ra);
    w.sorted_ranks_into(b, &mut rb);
    let (mut some_less, mut some_greater) = (false, false);
    for (x, y) in ra.iter().zip(&rb) {
        some_less |= x < y;
        some_greater |= x > y;
    }
    Ok(match (some_less, some_greater) {
        (false, false) => Dominance::Equal,
        (true, false) => Dominance::Below,
        (false, true) => Dominance::Above,
        (true, true) => Dominance::Incomparable,
    })
}
