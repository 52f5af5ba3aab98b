//! Symplectic matroids on `J = [n] ∪ [n]*`, given by their bases.

mod jset;
mod matroid;
mod ordering;
mod ordinary;

use thiserror::Error;

pub(crate) use jset::{deposit, index_mask, support_masks};
pub use jset::{format_elements, AdmissibleSet, JElement, MAX_GROUND};
pub use matroid::{SymplecticMatroid, MAX_ORACLE_GROUND};
pub use ordering::{compare_under, AdmissibleOrdering, Dominance};
pub use ordinary::{OrdinaryMatroid, PlainSet, MAX_ORDINARY_GROUND};

use crate::sympl::SymplError;
use crate::text::{self, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("BadElement: `{0}` is not an element of J")]
    BadElement(String),
    #[error("NotAdmissible: {0} contains some i together with i*")]
    NotAdmissible(String),
    #[error("BadOrdering: `{0}` is not a signed permutation")]
    BadOrdering(String),
    #[error("UnequalSizes: sets of size {left} and {right}")]
    UnequalSizes { left: usize, right: usize },
    #[error("OutsideGround: {set} is not inside a ground set of size {n}")]
    OutsideGround { set: String, n: usize },
    #[error("NoBases: the basis collection is empty")]
    NoBases,
    #[error("GroundTooLarge: n = {n} exceeds {max}")]
    GroundTooLarge { n: usize, max: usize },
    #[error("TooLargeForOracle: n = {n} exceeds the exhaustive limit {max}")]
    TooLargeForOracle { n: usize, max: usize },
    #[error("NotLagrangian: rank {rank} on ground size {n}")]
    NotLagrangian { rank: usize, n: usize },
    #[error("ExchangeFails: {b1} minus {element} has no replacement from {b2}")]
    ExchangeFails { b1: String, b2: String, element: u32 },
    #[error("StarredElement: {0} is not a subset of [n]")]
    StarredElement(String),
    #[error("NoBasisContains: no basis contains {0}")]
    NoBasisContains(String),
    #[error("RankZero: the matroid has rank 0")]
    RankZero,
    #[error("AlreadyLagrangian: rank equals n = {0}")]
    AlreadyLagrangian(usize),
    #[error("NotAMatroid: no maximum basis under {0}")]
    NotAMatroid(String),
    #[error(transparent)]
    Representation(#[from] SymplError),
}

/// Contents of a matroid file before any validation beyond syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidFile {
    pub n: usize,
    pub bases: Vec<AdmissibleSet>,
}

impl MatroidFile {
    pub fn into_symplectic(self) -> Result<SymplecticMatroid, MatroidError> {
        SymplecticMatroid::new(self.n, self.bases)
    }

    /// Reads the bases as subsets of `[n]`; stars are rejected.
    pub fn into_ordinary(self) -> Result<OrdinaryMatroid, MatroidError> {
        let mut out = Vec::with_capacity(self.bases.len());
        for b in self.bases {
            if b.starred_count() > 0 {
                return Err(MatroidError::StarredElement(b.to_string()));
            }
            out.push(PlainSet(b.support()));
        }
        OrdinaryMatroid::new(self.n, out)
    }
}

/// Parses the matroid text format:
///
/// ```text
/// ground 3
/// basis 1 2 3
/// basis 1* 2* 3
/// ```
///
/// A bare `basis` line is the empty basis.
pub fn parse_matroid(input: &str) -> Result<MatroidFile, ParseError> {
    let mut lines = text::lines(input);
    let first = lines.next().ok_or_else(|| ParseError::new(0, "missing `ground <n>` line"))?;
    if first.keyword() != "ground" {
        return Err(first.error(format!("expected `ground`, found `{}`", first.keyword())));
    }
    first.expect_arity(1)?;
    let n = first.parse_usize(1)?;
    if n > MAX_GROUND {
        return Err(first.error(format!("ground size {n} exceeds {MAX_GROUND}")));
    }
    let mut bases = Vec::new();
    for line in lines {
        if line.keyword() != "basis" {
            return Err(line.error(format!("expected `basis`, found `{}`", line.keyword())));
        }
        let set: AdmissibleSet =
            line.tokens[1..].join(" ").parse().map_err(|e: MatroidError| line.error(e.to_string()))?;
        if set.max_index() as usize > n {
            return Err(line.error(format!("{set} is not inside a ground set of size {n}")));
        }
        bases.push(set);
    }
    Ok(MatroidFile { n, bases })
}

/// Renders bases in the format read by [`parse_matroid`].
pub fn write_matroid(m: &SymplecticMatroid) -> String {
    let mut out = format!("ground {}\n", m.n());
    for &b in m.bases() {
        let body = format_elements(b);
        if body.is_empty() {
            out.push_str("basis\n");
        } else {
            out.push_str(&format!("basis {body}\n"));
        }
    }
    out
}
