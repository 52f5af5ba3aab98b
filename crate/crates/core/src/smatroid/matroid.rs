use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;

use super::jset::{deposit, support_masks, AdmissibleSet, JElement, MAX_GROUND};
use super::ordering::AdmissibleOrdering;
use super::MatroidError;
use crate::ffmat::{FMatrix, MinorOracle};
use crate::sympl::{make_stabilizer, StabilizerMatrix};

/// Largest ground size the maximality oracle accepts (`2^7 7! = 645120` orderings).
pub const MAX_ORACLE_GROUND: usize = 7;

/// A collection of equal-size admissible subsets of `J = [n] ∪ [n]*`.
///
/// Construction only checks the cheap structural invariants; whether the
/// collection satisfies the maximality condition is decided separately by
/// [`SymplecticMatroid::check_maximality`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatroid {
    n: usize,
    rank: usize,
    /// canonical order, no duplicates
    bases: Vec<AdmissibleSet>,
}

impl SymplecticMatroid {
    pub fn new<I: IntoIterator<Item = AdmissibleSet>>(n: usize, bases: I) -> Result<Self, MatroidError> {
        if n > MAX_GROUND {
            return Err(MatroidError::GroundTooLarge { n, max: MAX_GROUND });
        }
        let mut bases: Vec<AdmissibleSet> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(MatroidError::NoBases)?;
        let rank = first.len();
        for &b in &bases {
            if b.len() != rank {
                return Err(MatroidError::UnequalSizes { left: rank, right: b.len() });
            }
            if b.max_index() as usize > n {
                return Err(MatroidError::OutsideGround { set: b.to_string(), n });
            }
        }
        Ok(Self { n, rank, bases })
    }

    /// The matroid on an empty ground set, whose only basis is `∅`.
    pub fn empty() -> Self {
        Self { n: 0, rank: 0, bases: vec![AdmissibleSet::EMPTY] }
    }

    /// Bases are the admissible column sets whose `k x k` minor is nonzero.
    pub fn bases_from_representation(m: &FMatrix) -> Result<Self, MatroidError> {
        let s = make_stabilizer(m.clone())?;
        Self::from_stabilizer(&s)
    }

    pub fn from_stabilizer(s: &StabilizerMatrix) -> Result<Self, MatroidError> {
        let n = s.n();
        let k = s.rows();
        if n > MAX_GROUND {
            return Err(MatroidError::GroundTooLarge { n, max: MAX_GROUND });
        }
        let oracle = MinorOracle::new(s.generators());
        let supports: Vec<u32> = support_masks(n, k).collect();
        let bases: Vec<AdmissibleSet> = supports
            .par_iter()
            .flat_map_iter(|&support| {
                let indices: Vec<usize> = (0..n).filter(|i| support >> i & 1 == 1).collect();
                let oracle = &oracle;
                let mut cols = vec![0usize; k];
                (0..1u32 << k).filter_map(move |signs| {
                    for (j, &i) in indices.iter().enumerate() {
                        cols[j] = if signs >> j & 1 == 1 { n + i } else { i };
                    }
                    oracle.is_nonsingular(&cols).then(|| AdmissibleSet::signed(support, deposit(signs, support)))
                })
            })
            .collect();
        Self::new(n, bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[AdmissibleSet] {
        &self.bases
    }

    pub fn is_basis(&self, s: AdmissibleSet) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// Rank 0: the single basis is the empty set.
    pub fn is_degenerate(&self) -> bool {
        self.rank == 0
    }

    pub fn is_lagrangian(&self) -> bool {
        self.rank == self.n
    }

    /// `|B ∩ [n]|` is the same for every basis.
    pub fn is_homogeneous(&self) -> bool {
        self.bases.iter().map(|b| b.plain_count()).all_equal()
    }

    /// `rk(S) = max_B |S ∩ B|`.
    pub fn rank_of_set(&self, s: AdmissibleSet) -> usize {
        self.bases.iter().map(|&b| s.intersection_len(b)).max().unwrap_or(0)
    }

    pub fn is_independent(&self, s: AdmissibleSet) -> bool {
        self.bases.iter().any(|&b| s.is_subset(b))
    }

    /// Every subset of every basis.
    pub fn independent_sets(&self) -> HashSet<AdmissibleSet> {
        let mut all: HashSet<AdmissibleSet> = self.bases.iter().copied().collect();
        let mut frontier: Vec<AdmissibleSet> = self.bases.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in frontier {
                for e in s.elements() {
                    let t = s.without(e);
                    if all.insert(t) {
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        all
    }

    /// Minimal admissible sets contained in no basis, in canonical order.
    ///
    /// A circuit has at most `rank + 1` elements, so larger sizes are never visited.
    pub fn circuits(&self) -> Vec<AdmissibleSet> {
        let independent = self.independent_sets();
        let max_size = (self.rank + 1).min(self.n);
        let mut out = Vec::new();
        for size in 1..=max_size {
            for s in AdmissibleSet::all_of_size(self.n, size) {
                if !independent.contains(&s) && s.elements().all(|e| independent.contains(&s.without(e))) {
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn require_lagrangian(&self) -> Result<(), MatroidError> {
        if self.is_lagrangian() {
            Ok(())
        } else {
            Err(MatroidError::NotLagrangian { rank: self.rank, n: self.n })
        }
    }

    /// Dual of a Lagrangian matroid: bases `{B*}`.
    pub fn lagrangian_dual(&self) -> Result<Self, MatroidError> {
        self.require_lagrangian()?;
        Self::new(self.n, self.bases.iter().map(|b| b.star()))
    }

    pub fn is_self_dual(&self) -> Result<bool, MatroidError> {
        Ok(self.lagrangian_dual()? == *self)
    }

    /// `{C* : C a circuit}`, the circuits of the dual.
    pub fn cocircuits(&self) -> Result<Vec<AdmissibleSet>, MatroidError> {
        self.require_lagrangian()?;
        let mut out: Vec<AdmissibleSet> = self.circuits().into_iter().map(|c| c.star()).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// First `(C1, C2, e)` breaking circuit elimination, if any.
    pub fn circuit_elimination_violation(&self) -> Option<(AdmissibleSet, AdmissibleSet, JElement)> {
        let circuits = self.circuits();
        for (i, &c1) in circuits.iter().enumerate() {
            for &c2 in &circuits[i + 1..] {
                let Some(union) = c1.union(c2) else { continue };
                let shared = AdmissibleSet::from_bits_unchecked(c1.bits() & c2.bits());
                for e in shared.elements() {
                    let rest = union.without(e);
                    if !circuits.iter().any(|c| c.is_subset(rest)) {
                        return Some((c1, c2, e));
                    }
                }
            }
        }
        None
    }

    pub fn circuit_elimination_check(&self) -> bool {
        self.circuit_elimination_violation().is_none()
    }

    /// Whether some basis dominates every other basis under `w`.
    pub fn has_maximum_under(&self, w: &AdmissibleOrdering) -> bool {
        let k = self.rank;
        let mut ranks = Vec::with_capacity(self.bases.len() * k);
        let mut scratch = Vec::with_capacity(k);
        for &b in &self.bases {
            w.sorted_ranks_into(b, &mut scratch);
            ranks.extend_from_slice(&scratch);
        }
        if k == 0 {
            return true;
        }
        let mut top = vec![0u8; k];
        for chunk in ranks.chunks_exact(k) {
            for (t, &r) in top.iter_mut().zip(chunk) {
                *t = (*t).max(r);
            }
        }
        ranks.chunks_exact(k).any(|chunk| chunk == top.as_slice())
    }

    /// First admissible ordering (in enumeration order) with no maximum basis.
    pub fn maximality_violation(&self) -> Result<Option<AdmissibleOrdering>, MatroidError> {
        let n = self.n;
        if n > MAX_ORACLE_GROUND {
            return Err(MatroidError::TooLargeForOracle { n, max: MAX_ORACLE_GROUND });
        }
        let perms: Vec<Vec<u32>> = (1..=n as u32).permutations(n).collect();
        Ok(perms.par_iter().find_map_first(|perm| {
            (0..1u64 << n)
                .map(|signs| AdmissibleOrdering::for_permutation(perm, signs))
                .find(|w| !self.has_maximum_under(w))
        }))
    }

    /// The maximality condition over all `2^n n!` admissible orderings.
    pub fn check_maximality(&self) -> Result<bool, MatroidError> {
        Ok(self.maximality_violation()?.is_none())
    }
}
