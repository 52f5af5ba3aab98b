//! Bit-packed GF(2) kernels.

use super::matrix::FMatrix;

pub(crate) fn pack_rows(m: &FMatrix) -> Vec<Vec<u64>> {
    let words = m.cols().div_ceil(64);
    m.row_iter()
        .map(|row| {
            let mut packed = vec![0u64; words];
            for (c, &e) in row.iter().enumerate() {
                if e != 0 {
                    packed[c / 64] |= 1 << (c % 64);
                }
            }
            packed
        })
        .collect()
}

/// Column `c` as a bitmask over rows; requires `rows <= 64`.
pub(crate) fn pack_columns(m: &FMatrix) -> Vec<u64> {
    debug_assert!(m.rows() <= 64);
    let mut cols = vec![0u64; m.cols()];
    for r in 0..m.rows() {
        for (c, &e) in m.row(r).iter().enumerate() {
            if e != 0 {
                cols[c] |= 1 << r;
            }
        }
    }
    cols
}

pub(crate) fn rank_in_place(rows: &mut [Vec<u64>]) -> usize {
    let Some(words) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for w in 0..words {
        for bit in 0..64 {
            if rank == rows.len() {
                return rank;
            }
            let mask = 1u64 << bit;
            let Some(pr) = (rank..rows.len()).find(|&r| rows[r][w] & mask != 0) else {
                continue;
            };
            rows.swap(rank, pr);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail.iter_mut() {
                if row[w] & mask != 0 {
                    for (x, &p) in row[w..].iter_mut().zip(&pivot[w..]) {
                        *x ^= p;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Reduces `v` against a basis indexed by leading bit; true if it was independent and got added.
fn insert(basis: &mut [u64; 64], mut v: u64) -> bool {
    while v != 0 {
        let lead = 63 - v.leading_zeros() as usize;
        if basis[lead] == 0 {
            basis[lead] = v;
            return true;
        }
        v ^= basis[lead];
    }
    false
}

/// Whether the given single-word vectors are linearly independent.
pub(crate) fn columns_independent(vectors: impl Iterator<Item = u64>) -> bool {
    let mut basis = [0u64; 64];
    vectors.into_iter().all(|v| insert(&mut basis, v))
}

/// Rank of a set of single-word vectors.
pub(crate) fn word_rank(vectors: impl Iterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    vectors.filter(|&v| insert(&mut basis, v)).count()
}
