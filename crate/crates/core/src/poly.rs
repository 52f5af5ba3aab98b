//! The restricted Tutte-Martin polynomial of a symplectic matroid and the
//! interlace polynomial of a graph, both kept in the `(x-1)` basis.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::ffmat::{word_rank, FieldSpec};
use crate::graphs::{lagrangian_from_graph, GraphError, WGraph};
use crate::smatroid::{deposit, support_masks, AdmissibleSet, SymplecticMatroid};

/// Default bound on the number of admissible sets summed over.
pub const DEFAULT_TERM_CAP: u64 = 1 << 24;

/// Largest vertex count accepted by [`interlace`].
pub const MAX_INTERLACE_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("CapExceeded: {terms} terms exceed the cap {cap}")]
    CapExceeded { terms: u64, cap: u64 },
    #[error("TooManyVertices: {vertices} vertices exceed {max}")]
    TooManyVertices { vertices: usize, max: usize },
    #[error("NotBinary: edge {u} {v} has weight {weight}, not 1")]
    NotBinary { u: usize, v: usize, weight: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `Σ c_j (x-1)^j` with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedPolynomial {
    /// no trailing zeros; the zero polynomial is empty
    coeffs: Vec<u64>,
}

impl ShiftedPolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients of `1, x, x^2, ...`.
    pub fn to_monomial(&self) -> Vec<i128> {
        let d = self.coeffs.len();
        let mut out = vec![0i128; d];
        // binomial row of (x-1)^j, updated in place
        let mut row = vec![0i128; d];
        for (j, &c) in self.coeffs.iter().enumerate() {
            if j == 0 {
                row[0] = 1;
            } else {
                for i in (1..=j).rev() {
                    row[i] = row[i - 1] - row[i];
                }
                row[0] = -row[0];
            }
            for i in 0..=j {
                out[i] += c as i128 * row[i];
            }
        }
        out
    }

    pub fn eval(&self, x: i64) -> i128 {
        let t = x as i128 - 1;
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * t + c as i128)
    }
}

impl fmt::Display for ShiftedPolynomial {
    /// Monomial form such as `4x` or `x^2 + 2x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = self.to_monomial();
        let mut first = true;
        for (i, &a) in mono.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            let sign = if a < 0 { "-" } else { "+" };
            if first {
                if a < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = a.unsigned_abs();
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn add_into(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        return add_into(b, a);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `Σ_{S ∈ J_k} (x-1)^{k - rk(S)}` with `rk(S) = max_B |S ∩ B|`.
pub fn restricted_tutte_martin(m: &SymplecticMatroid, cap: u64) -> Result<ShiftedPolynomial, PolyError> {
    let (n, k) = (m.n(), m.rank());
    let terms = binomial(n, k).saturating_mul(1u64 << k);
    if terms > cap {
        return Err(PolyError::CapExceeded { terms, cap });
    }
    let supports: Vec<u32> = support_masks(n, k).collect();
    let coeffs = supports
        .par_iter()
        .map(|&support| {
            let mut local = vec![0u64; k + 1];
            for signs in 0..1u32 << k {
                let s = AdmissibleSet::signed(support, deposit(signs, support));
                local[k - m.rank_of_set(s)] += 1;
            }
            local
        })
        .reduce(Vec::new, add_into);
    Ok(ShiftedPolynomial::new(coeffs))
}

/// `Σ_{S ⊆ V} (x-1)^{|S| - rank A[S]}` over GF(2).
pub fn interlace(g: &WGraph) -> Result<ShiftedPolynomial, PolyError> {
    let v = g.vertices();
    if v > MAX_INTERLACE_VERTICES {
        return Err(PolyError::TooManyVertices { vertices: v, max: MAX_INTERLACE_VERTICES });
    }
    if let Some(e) = g.edges().iter().find(|e| e.weight != 1) {
        return Err(PolyError::NotBinary { u: e.u, v: e.v, weight: e.weight });
    }
    let rows = g.adjacency_masks();
    let coeffs = (0..1u64 << v)
        .into_par_iter()
        .fold(
            || vec![0u64; v + 1],
            |mut acc, s| {
                let induced = (0..v).filter(|&i| s >> i & 1 == 1).map(|i| rows[i] & s);
                let corank = s.count_ones() as usize - word_rank(induced);
                acc[corank] += 1;
                acc
            },
        )
        .reduce(Vec::new, add_into);
    Ok(ShiftedPolynomial::new(coeffs))
}

/// Both polynomials of a binary graph, with whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialComparison {
    pub tutte_martin: ShiftedPolynomial,
    pub interlace: ShiftedPolynomial,
}

impl PolynomialComparison {
    pub fn equal(&self) -> bool {
        self.tutte_martin == self.interlace
    }
}

pub fn compare_tm_and_interlace(g: &WGraph) -> Result<PolynomialComparison, PolyError> {
    let interlace = interlace(g)?;
    let m = lagrangian_from_graph(g, FieldSpec::gf2())?;
    let tutte_martin = restricted_tutte_martin(&m, DEFAULT_TERM_CAP)?;
    Ok(PolynomialComparison { tutte_martin, interlace })
}

/// Whether the restricted Tutte-Martin polynomial of the graph state of `g`
/// equals the interlace polynomial of `g`.
pub fn verify_tm_equals_interlace(g: &WGraph) -> Result<bool, PolyError> {
    Ok(compare_tm_and_interlace(g)?.equal())
}
