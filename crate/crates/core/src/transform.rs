//! Constructions producing new symplectic matroids from old ones.

use std::collections::BTreeSet;

use crate::smatroid::{AdmissibleSet, JElement, MatroidError, SymplecticMatroid, MAX_GROUND, MAX_ORACLE_GROUND};

/// Bases `{B - a : a ∈ B}` on the same ground set.
pub fn contraction(m: &SymplecticMatroid, a: JElement) -> Result<SymplecticMatroid, MatroidError> {
    let bases: Vec<AdmissibleSet> = m.bases().iter().filter(|b| b.contains(a)).map(|b| b.without(a)).collect();
    if bases.is_empty() {
        return Err(MatroidError::NoBasisContains(a.to_string()));
    }
    SymplecticMatroid::new(m.n(), bases)
}

/// Contraction followed by deleting the index of `a` and closing the gap.
pub fn contraction_relabeled(m: &SymplecticMatroid, a: JElement) -> Result<SymplecticMatroid, MatroidError> {
    let c = contraction(m, a)?;
    let cut = 2 * (a.index - 1);
    let low = (1u64 << cut) - 1;
    let bases = c.bases().iter().map(|b| {
        let bits = b.bits();
        AdmissibleSet::from_bits_unchecked((bits & low) | (bits >> (cut + 2)) << cut)
    });
    SymplecticMatroid::new(m.n() - 1, bases)
}

/// Every admissible `(k-1)`-subset of a basis. Rank 1 gives the degenerate matroid `{∅}`.
pub fn truncation(m: &SymplecticMatroid) -> Result<SymplecticMatroid, MatroidError> {
    if m.rank() == 0 {
        return Err(MatroidError::RankZero);
    }
    let bases: BTreeSet<AdmissibleSet> =
        m.bases().iter().flat_map(|&b| b.elements().map(move |e| b.without(e))).collect();
    SymplecticMatroid::new(m.n(), bases)
}

/// Admissible `(k+1)`-supersets of bases, checked by the maximality oracle when `n` allows it.
pub fn higgs_lift(m: &SymplecticMatroid) -> Result<SymplecticMatroid, MatroidError> {
    let n = m.n();
    if m.is_lagrangian() {
        return Err(MatroidError::AlreadyLagrangian(n));
    }
    let bases: BTreeSet<AdmissibleSet> = m
        .bases()
        .iter()
        .flat_map(|&b| {
            (1..=n as u32).flat_map(|i| [JElement::plain(i), JElement::starred(i)]).filter_map(move |e| b.with(e))
        })
        .filter(|s| s.len() == m.rank() + 1)
        .collect();
    let lifted = SymplecticMatroid::new(n, bases)?;
    if n <= MAX_ORACLE_GROUND {
        if let Some(w) = lifted.maximality_violation()? {
            return Err(MatroidError::NotAMatroid(w.to_string()));
        }
    }
    Ok(lifted)
}

/// Bases `B1 ∪ B2'` where `B2'` shifts every index of `m2` up by `n1`.
pub fn direct_sum(m1: &SymplecticMatroid, m2: &SymplecticMatroid) -> Result<SymplecticMatroid, MatroidError> {
    let n = m1.n() + m2.n();
    if n > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge { n, max: MAX_GROUND });
    }
    let bases = m1.bases().iter().flat_map(|&b1| {
        m2.bases().iter().map(move |&b2| AdmissibleSet::from_bits_unchecked(b1.bits() | b2.shifted(m1.n()).bits()))
    });
    SymplecticMatroid::new(n, bases.collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffmat::{FMatrix, FieldSpec};

    fn sets(list: &[&str]) -> Vec<AdmissibleSet> {
        let mut v: Vec<AdmissibleSet> = list.iter().map(|s| s.parse().unwrap()).collect();
        v.sort();
        v
    }

    fn matroid(n: usize, list: &[&str]) -> SymplecticMatroid {
        SymplecticMatroid::new(n, sets(list)).unwrap()
    }

    fn k3() -> SymplecticMatroid {
        matroid(3, &["1 2 3", "1* 2* 3", "1* 2 3*", "1 2* 3*"])
    }

    fn e(s: &str) -> JElement {
        s.parse().unwrap()
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(contraction(&k3(), e("3")).unwrap().bases(), sets(&["1 2", "1* 2*"]).as_slice());
        assert_eq!(contraction(&k3(), e("3*")).unwrap().bases(), sets(&["1* 2", "1 2*"]).as_slice());
        let i0 = matroid(2, &["1 2"]);
        assert!(matches!(contraction(&i0, e("1*")), Err(MatroidError::NoBasisContains(_))));
        let r = contraction_relabeled(&k3(), e("1")).unwrap();
        assert_eq!(r.n(), 2);
        assert_eq!(r.bases(), sets(&["1 2", "1* 2*"]).as_slice());
    }

    #[test]
    fn truncation_examples() {
        let t = truncation(&k3()).unwrap();
        assert_eq!(t.rank(), 2);
        assert_eq!(t.bases().len(), 12);
        assert_eq!(truncation(&matroid(2, &["1 2"])).unwrap().bases(), sets(&["1", "2"]).as_slice());
        let zero = truncation(&matroid(2, &["1", "2*"])).unwrap();
        assert!(zero.is_degenerate());
        assert_eq!(zero.bases(), &[AdmissibleSet::EMPTY]);
        assert_eq!(truncation(&zero), Err(MatroidError::RankZero));
    }

    #[test]
    fn higgs_lift_examples() {
        assert_eq!(higgs_lift(&matroid(2, &["1"])).unwrap().bases(), sets(&["1 2", "1 2*"]).as_slice());
        assert_eq!(higgs_lift(&k3()), Err(MatroidError::AlreadyLagrangian(3)));
        let c = contraction(&k3(), e("3")).unwrap();
        assert_eq!(higgs_lift(&c).unwrap().bases(), sets(&["1 2 3", "1 2 3*", "1* 2* 3", "1* 2* 3*"]).as_slice());
        let err = higgs_lift(&matroid(3, &["1 2", "1* 3"])).unwrap_err();
        assert_eq!(err, MatroidError::NotAMatroid("2* > 1 > 3* > 3 > 1* > 2".into()));
    }

    #[test]
    fn direct_sum_examples() {
        let i1 = matroid(1, &["1"]);
        assert_eq!(direct_sum(&i1, &i1).unwrap().bases(), sets(&["1 2"]).as_slice());
        let free = matroid(1, &["1", "1*"]);
        assert_eq!(direct_sum(&free, &free).unwrap().bases(), sets(&["1 2", "1 2*", "1* 2", "1* 2*"]).as_slice());
        assert_eq!(direct_sum(&k3(), &SymplecticMatroid::empty()).unwrap(), k3());
        assert_eq!(direct_sum(&SymplecticMatroid::empty(), &k3()).unwrap(), k3());
    }

    #[test]
    fn graph_state_contraction_is_a_matroid() {
        let f = FieldSpec::gf2();
        let m = FMatrix::from_rows(f, &[[1, 0, 0, 0, 1, 1], [0, 1, 0, 1, 0, 1], [0, 0, 1, 1, 1, 0]]).unwrap();
        let k3 = SymplecticMatroid::bases_from_representation(&m).unwrap();
        assert_eq!(k3, self::k3());
        for a in ["1", "2*", "3"] {
            assert!(contraction(&k3, e(a)).unwrap().check_maximality().unwrap());
        }
    }
}
