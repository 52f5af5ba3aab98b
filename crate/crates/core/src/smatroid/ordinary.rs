use std::collections::HashSet;
use std::fmt;

use super::jset::{index_mask, support_masks};
use super::MatroidError;

/// Largest ground set on which basis exchange is verified at construction.
pub const MAX_ORDINARY_GROUND: usize = 12;

/// A subset of `[n]` stored as a mask with bit `i-1` for element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlainSet(pub u32);

impl PlainSet {
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u32) -> bool {
        i >= 1 && self.0 >> (i - 1) & 1 == 1
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        (0..32).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(it: I) -> Self {
        Self(it.into_iter().fold(0, |m, i| m | 1 << (i - 1)))
    }

    /// Canonical order: by size, then lexicographic on sorted elements.
    pub fn canonical_key(self) -> (usize, std::cmp::Reverse<u32>) {
        (self.len(), std::cmp::Reverse(self.0.reverse_bits()))
    }
}

impl fmt::Display for PlainSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub(crate) fn sort_canonical(v: &mut [PlainSet]) {
    v.sort_unstable_by_key(|s| s.canonical_key());
}

/// An ordinary matroid on `[n]` given by its bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryMatroid {
    n: usize,
    rank: usize,
    bases: Vec<PlainSet>,
}

impl OrdinaryMatroid {
    /// Checks equal cardinality and the basis exchange axiom by brute force.
    pub fn new<I: IntoIterator<Item = PlainSet>>(n: usize, bases: I) -> Result<Self, MatroidError> {
        if n > MAX_ORDINARY_GROUND {
            return Err(MatroidError::GroundTooLarge { n, max: MAX_ORDINARY_GROUND });
        }
        let mut bases: Vec<PlainSet> = bases.into_iter().collect();
        sort_canonical(&mut bases);
        bases.dedup();
        let first = *bases.first().ok_or(MatroidError::NoBases)?;
        let rank = first.len();
        for b in &bases {
            if b.len() != rank {
                return Err(MatroidError::UnequalSizes { left: rank, right: b.len() });
            }
            if b.0 & !index_mask(n) != 0 {
                return Err(MatroidError::OutsideGround { set: b.to_string(), n });
            }
        }
        let lookup: HashSet<u32> = bases.iter().map(|b| b.0).collect();
        for &b1 in &bases {
            for &b2 in &bases {
                let only1 = b1.0 & !b2.0;
                let only2 = b2.0 & !b1.0;
                for x in PlainSet(only1).elements() {
                    let removed = b1.0 & !(1 << (x - 1));
                    let ok = PlainSet(only2).elements().any(|y| lookup.contains(&(removed | 1 << (y - 1))));
                    if !ok {
                        return Err(MatroidError::ExchangeFails { b1: b1.to_string(), b2: b2.to_string(), element: x });
                    }
                }
            }
        }
        Ok(Self { n, rank, bases })
    }

    /// `U(r, n)`: every `r`-subset is a basis.
    pub fn uniform(rank: usize, n: usize) -> Result<Self, MatroidError> {
        Self::new(n, support_masks(n, rank).map(PlainSet))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[PlainSet] {
        &self.bases
    }

    pub fn dual(&self) -> Self {
        let full = index_mask(self.n);
        let mut bases: Vec<PlainSet> = self.bases.iter().map(|b| PlainSet(full & !b.0)).collect();
        sort_canonical(&mut bases);
        Self { n: self.n, rank: self.n - self.rank, bases }
    }

    /// `M = M*`: the complement of every basis is a basis.
    pub fn is_identically_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// Minimal subsets of `[n]` contained in no basis.
    pub fn circuits(&self) -> Vec<PlainSet> {
        let mut independent: HashSet<u32> = HashSet::new();
        for b in &self.bases {
            // every submask of b
            let mut sub = b.0;
            loop {
                independent.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & b.0;
            }
        }
        let mut out = Vec::new();
        for size in 1..=(self.rank + 1).min(self.n) {
            for s in support_masks(self.n, size) {
                if !independent.contains(&s)
                    && PlainSet(s).elements().all(|e| independent.contains(&(s & !(1 << (e - 1)))))
                {
                    out.push(PlainSet(s));
                }
            }
        }
        sort_canonical(&mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(v: &[u32]) -> PlainSet {
        PlainSet::from_elements(v.iter().copied())
    }

    #[test]
    fn uniform_matroids() {
        let u24 = OrdinaryMatroid::uniform(2, 4).unwrap();
        assert_eq!(u24.bases().len(), 6);
        assert!(u24.is_identically_self_dual());
        assert_eq!(u24.circuits().len(), 4);
        assert!(u24.circuits().iter().all(|c| c.len() == 3));
        let u13 = OrdinaryMatroid::uniform(1, 3).unwrap();
        assert!(!u13.is_identically_self_dual());
        assert_eq!(u13.dual(), OrdinaryMatroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn exchange_violations_are_rejected() {
        // {1,2} and {3,4}: removing 1 from {1,2} cannot be repaired with 3 or 4
        let err = OrdinaryMatroid::new(4, vec![ps(&[1, 2]), ps(&[3, 4])]).unwrap_err();
        assert!(matches!(err, MatroidError::ExchangeFails { .. }));
        assert!(OrdinaryMatroid::new(13, vec![ps(&[1])]).is_err());
        assert!(OrdinaryMatroid::new(2, vec![ps(&[1]), ps(&[1, 2])]).is_err());
    }

    #[test]
    fn canonical_display_order() {
        let mut v = vec![ps(&[2, 3]), ps(&[1]), ps(&[1, 3]), ps(&[1, 2])];
        sort_canonical(&mut v);
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{1}", "{1, 2}", "{1, 3}", "{2, 3}"]);
    }
}
