//! Access structures induced by Lagrangian matroids through a dealer index.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::graphs::WGraph;
use crate::smatroid::{
    index_mask, AdmissibleSet, JElement, MatroidError, OrdinaryMatroid, PlainSet, SymplecticMatroid,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QssError {
    #[error("DealerOutOfRange: dealer {dealer} on ground size {n}")]
    DealerOutOfRange { dealer: u32, n: usize },
    #[error("Degenerate: the empty set is authorized for dealer {0}")]
    Degenerate(u32),
    #[error("PlayerOutOfRange: {set} is not a set of players for dealer {dealer} on ground size {n}")]
    PlayerOutOfRange { set: String, dealer: u32, n: usize },
    #[error("NotIdenticallySelfDual: the dual has bases of size {0}")]
    NotIdenticallySelfDual(usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Forgets stars: `{1*, 3} -> {1, 3}`.
pub fn phi(s: AdmissibleSet) -> PlainSet {
    PlainSet(s.support())
}

fn lex_key(s: &PlainSet) -> Vec<u32> {
    s.elements().collect()
}

/// Distinct inclusion-minimal members, in lexicographic order.
fn minimalize(mut sets: Vec<PlainSet>) -> Vec<PlainSet> {
    sets.sort_unstable_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let mut kept: Vec<PlainSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.0 & s.0 == k.0) {
            kept.push(s);
        }
    }
    kept.sort_by_key(lex_key);
    kept
}

/// Minimal authorized sets of players `[n] - {dealer}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccessStructure {
    dealer: u32,
    n: usize,
    minimal_sets: Vec<PlainSet>,
}

impl AccessStructure {
    /// Removes non-minimal duplicates; rejects the empty set and sets touching the dealer.
    pub fn new(dealer: u32, n: usize, sets: Vec<PlainSet>) -> Result<Self, QssError> {
        if dealer == 0 || dealer as usize > n {
            return Err(QssError::DealerOutOfRange { dealer, n });
        }
        let players = index_mask(n) & !(1 << (dealer - 1));
        for s in &sets {
            if s.is_empty() {
                return Err(QssError::Degenerate(dealer));
            }
            if s.0 & !players != 0 {
                return Err(QssError::PlayerOutOfRange { set: s.to_string(), dealer, n });
            }
        }
        Ok(Self { dealer, n, minimal_sets: minimalize(sets) })
    }

    pub fn dealer(&self) -> u32 {
        self.dealer
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn minimal_sets(&self) -> &[PlainSet] {
        &self.minimal_sets
    }
}

impl fmt::Display for AccessStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.minimal_sets.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn access_from_circuits(n: usize, circuits: &[AdmissibleSet], dealer: u32) -> Result<AccessStructure, QssError> {
    if dealer == 0 || dealer as usize > n {
        return Err(QssError::DealerOutOfRange { dealer, n });
    }
    let (plain, starred) = (JElement::plain(dealer), JElement::starred(dealer));
    let sets = circuits
        .iter()
        .filter_map(|&c| {
            if c.contains(plain) {
                Some(phi(c.without(plain)))
            } else if c.contains(starred) {
                Some(phi(c.without(starred)))
            } else {
                None
            }
        })
        .collect();
    AccessStructure::new(dealer, n, sets)
}

/// `{φ(A) : A ∪ {i} or A ∪ {i*} is a circuit}`, minimalized.
pub fn induced_access_structure(m: &SymplecticMatroid, dealer: u32) -> Result<AccessStructure, QssError> {
    if !m.is_lagrangian() {
        return Err(MatroidError::NotLagrangian { rank: m.rank(), n: m.n() }.into());
    }
    access_from_circuits(m.n(), &m.circuits(), dealer)
}

/// Every two minimal sets intersect. An empty structure authorizes nobody and is invalid.
pub fn is_quantum_access_structure(a: &AccessStructure) -> bool {
    let sets = a.minimal_sets();
    !sets.is_empty()
        && sets.iter().all(|s| !s.is_empty())
        && sets.iter().enumerate().all(|(i, s)| sets[i + 1..].iter().all(|t| s.0 & t.0 != 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DealerVerdict {
    Structure { access: AccessStructure, valid: bool },
    Degenerate,
}

impl DealerVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Self::Structure { valid: true, .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretSharingReport {
    /// indexed by dealer - 1
    pub dealers: Vec<DealerVerdict>,
}

impl SecretSharingReport {
    /// Secret sharing: every dealer induces a quantum access structure.
    pub fn all_valid(&self) -> bool {
        self.dealers.iter().all(DealerVerdict::is_valid)
    }

    pub fn none_valid(&self) -> bool {
        !self.dealers.iter().any(DealerVerdict::is_valid)
    }
}

pub fn secret_sharing_report(m: &SymplecticMatroid) -> Result<SecretSharingReport, QssError> {
    if !m.is_lagrangian() {
        return Err(MatroidError::NotLagrangian { rank: m.rank(), n: m.n() }.into());
    }
    let circuits = m.circuits();
    let dealers = (1..=m.n() as u32)
        .into_par_iter()
        .map(|d| match access_from_circuits(m.n(), &circuits, d) {
            Ok(access) => {
                let valid = is_quantum_access_structure(&access);
                Ok(DealerVerdict::Structure { access, valid })
            }
            Err(QssError::Degenerate(_)) => Ok(DealerVerdict::Degenerate),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SecretSharingReport { dealers })
}

/// No cycles of length at most 4 and no vertices of degree 1.
pub fn necessary_condition_applies(g: &WGraph) -> bool {
    g.girth().is_none_or(|girth| girth >= 5) && g.min_degree().is_some_and(|d| d >= 2)
}

/// `{A : A ∪ {i} is a circuit}`, minimalized.
pub fn ordinary_access_structure(om: &OrdinaryMatroid, dealer: u32) -> Result<AccessStructure, QssError> {
    if dealer == 0 || dealer as usize > om.n() {
        return Err(QssError::DealerOutOfRange { dealer, n: om.n() });
    }
    let bit = 1u32 << (dealer - 1);
    let sets = om.circuits().into_iter().filter(|c| c.0 & bit != 0).map(|c| PlainSet(c.0 & !bit)).collect();
    AccessStructure::new(dealer, om.n(), sets)
}

/// Bases `B ∪ ([n] - B)*` of an identically self-dual ordinary matroid.
pub fn lift_identically_self_dual(om: &OrdinaryMatroid) -> Result<SymplecticMatroid, QssError> {
    if !om.is_identically_self_dual() {
        return Err(QssError::NotIdenticallySelfDual(om.n() - om.rank()));
    }
    let full = index_mask(om.n());
    let bases = om.bases().iter().map(|b| AdmissibleSet::signed(full, full & !b.0));
    Ok(SymplecticMatroid::new(om.n(), bases.collect::<Vec<_>>())?)
}
