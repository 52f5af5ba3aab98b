//! The symplectic side of the correspondence: vectors `(a|b)` in GF(p)^{2n},
//! isotropic generator matrices, CSS block form, torus rescaling and
//! brute-force code distance.

use std::fmt;

use thiserror::Error;

use crate::ffmat::{FMatrix, FfError, FieldSpec, Residue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplError {
    #[error(transparent)]
    Field(#[from] FfError),
    #[error("OddColumnCount: {0} columns cannot split as (a|b)")]
    OddColumnCount(usize),
    #[error("NotIsotropic: rows {} and {} have nonzero symplectic product", .0 + 1, .1 + 1)]
    NotIsotropic(usize, usize),
    #[error("DependentRows: {rows} generators span only dimension {rank}")]
    DependentRows { rows: usize, rank: usize },
    #[error("TooManyRows: {rows} rows exceed n = {n}; an isotropic subspace has dimension at most n")]
    TooManyRows { rows: usize, n: usize },
    #[error("XZtNonzero: X Z^t has a nonzero entry at ({0}, {1})")]
    XZtNonzero(usize, usize),
    #[error("ZeroTorusEntry: torus entry {0} is zero")]
    ZeroTorusEntry(usize),
    #[error("LengthMismatch: expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("BadPauli: {0}")]
    BadPauli(String),
}

/// A vector `(a|b)` of GF(p)^{2n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    field: FieldSpec,
    a: Vec<Residue>,
    b: Vec<Residue>,
}

impl SymplecticVector {
    pub fn new(field: FieldSpec, a: Vec<Residue>, b: Vec<Residue>) -> Result<Self, SymplError> {
        if a.len() != b.len() {
            return Err(SymplError::LengthMismatch { expected: a.len(), found: b.len() });
        }
        let p = field.p();
        if let Some(&bad) = a.iter().chain(&b).find(|&&x| x >= p) {
            return Err(FfError::EntryOutOfRange { entry: bad, p }.into());
        }
        Ok(Self { field, a, b })
    }

    /// Splits a length-2n row into its halves.
    pub fn from_row(field: FieldSpec, row: &[Residue]) -> Result<Self, SymplError> {
        if !row.len().is_multiple_of(2) {
            return Err(SymplError::OddColumnCount(row.len()));
        }
        let n = row.len() / 2;
        Self::new(field, row[..n].to_vec(), row[n..].to_vec())
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Self { field, a: vec![0; n], b: vec![0; n] }
    }

    /// `e_i` (unstarred) or `e_i*` (starred), 0-based position.
    pub fn unit(field: FieldSpec, n: usize, position: usize, starred: bool) -> Self {
        let mut v = Self::zero(field, n);
        if starred {
            v.b[position] = 1;
        } else {
            v.a[position] = 1;
        }
        v
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn a(&self) -> &[Residue] {
        &self.a
    }

    pub fn b(&self) -> &[Residue] {
        &self.b
    }

    pub fn to_row(&self) -> Vec<Residue> {
        let mut r = self.a.clone();
        r.extend_from_slice(&self.b);
        r
    }

    /// Number of positions with `(a_i, b_i) != (0, 0)`.
    pub fn weight(&self) -> usize {
        symplectic_weight(&self.a, &self.b)
    }
}

pub(crate) fn symplectic_weight(a: &[Residue], b: &[Residue]) -> usize {
    a.iter().zip(b).filter(|(&x, &z)| x != 0 || z != 0).count()
}

fn inner_halves(f: FieldSpec, a: &[Residue], b: &[Residue], c: &[Residue], d: &[Residue]) -> Residue {
    let mut acc = 0;
    for i in 0..a.len() {
        acc = f.add(acc, f.mul(a[i], d[i]));
        acc = f.sub(acc, f.mul(c[i], b[i]));
    }
    acc
}

/// `<(a|b), (c|d)> = a.d - c.b`.
pub fn symplectic_inner(u: &SymplecticVector, v: &SymplecticVector) -> Result<Residue, SymplError> {
    if u.field != v.field {
        return Err(FfError::FieldMismatch { left: u.field.p(), right: v.field.p() }.into());
    }
    if u.n() != v.n() {
        return Err(SymplError::LengthMismatch { expected: u.n(), found: v.n() });
    }
    Ok(inner_halves(u.field, &u.a, &u.b, &v.a, &v.b))
}

/// First pair of rows with nonzero symplectic product, if any.
fn isotropy_violation(m: &FMatrix) -> Result<Option<(usize, usize)>, SymplError> {
    if !m.cols().is_multiple_of(2) {
        return Err(SymplError::OddColumnCount(m.cols()));
    }
    let n = m.cols() / 2;
    let f = m.field();
    for i in 0..m.rows() {
        let (a, b) = m.row(i).split_at(n);
        for j in i + 1..m.rows() {
            let (c, d) = m.row(j).split_at(n);
            if inner_halves(f, a, b, c, d) != 0 {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Whether every pair of rows of `[A|B]` is symplectically orthogonal.
pub fn is_isotropic(m: &FMatrix) -> Result<bool, SymplError> {
    Ok(isotropy_violation(m)?.is_none())
}

/// Symplectic complement of the row space of `m` (2n columns), as a basis matrix.
pub fn symplectic_complement(m: &FMatrix) -> Result<FMatrix, SymplError> {
    if !m.cols().is_multiple_of(2) {
        return Err(SymplError::OddColumnCount(m.cols()));
    }
    let n = m.cols() / 2;
    let f = m.field();
    // <(a|b),(c|d)> = a.d - b.c, so (c|d) is orthogonal iff [-B | A] (c|d)^t = 0
    let mut swapped = FMatrix::zeros(f, m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..n {
            swapped.set(r, c, f.neg(m.get(r, n + c)));
            swapped.set(r, n + c, m.get(r, c));
        }
    }
    Ok(swapped.nullspace())
}

/// Generator matrix of an F_p-linear stabilizer code: independent rows
/// spanning an isotropic subspace of GF(p)^{2n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerMatrix {
    n: usize,
    gens: FMatrix,
}

impl StabilizerMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, i.e. the rank of the induced symplectic matroid.
    pub fn rows(&self) -> usize {
        self.gens.rows()
    }

    /// Logical qudit count `k = n - rows`.
    pub fn logical_qudits(&self) -> usize {
        self.n - self.gens.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.gens.field()
    }

    pub fn generators(&self) -> &FMatrix {
        &self.gens
    }

    pub fn x_block(&self) -> FMatrix {
        self.gens.column_block(0, self.n)
    }

    pub fn z_block(&self) -> FMatrix {
        self.gens.column_block(self.n, 2 * self.n)
    }

    pub fn generator(&self, i: usize) -> SymplecticVector {
        SymplecticVector::from_row(self.field(), self.gens.row(i)).expect("even width")
    }

    pub fn symplectic_complement(&self) -> FMatrix {
        symplectic_complement(&self.gens).expect("even width")
    }
}

/// Validates an isotropic generator matrix with independent rows.
pub fn make_stabilizer(m: FMatrix) -> Result<StabilizerMatrix, SymplError> {
    if !m.cols().is_multiple_of(2) {
        return Err(SymplError::OddColumnCount(m.cols()));
    }
    let n = m.cols() / 2;
    if m.rows() > n {
        return Err(SymplError::TooManyRows { rows: m.rows(), n });
    }
    let rank = m.rank();
    if rank != m.rows() {
        return Err(SymplError::DependentRows { rows: m.rows(), rank });
    }
    if let Some((i, j)) = isotropy_violation(&m)? {
        return Err(SymplError::NotIsotropic(i, j));
    }
    Ok(StabilizerMatrix { n, gens: m })
}

/// CSS stabilizer `[X 0; 0 Z]` from blocks with `X Z^t = 0`.
pub fn build_css(x_block: &FMatrix, z_block: &FMatrix) -> Result<StabilizerMatrix, SymplError> {
    if x_block.field() != z_block.field() {
        return Err(FfError::FieldMismatch { left: x_block.field().p(), right: z_block.field().p() }.into());
    }
    if x_block.cols() != z_block.cols() {
        return Err(SymplError::LengthMismatch { expected: x_block.cols(), found: z_block.cols() });
    }
    let f = x_block.field();
    let n = x_block.cols();
    let xzt = x_block.mul(&z_block.transpose())?;
    for i in 0..xzt.rows() {
        for j in 0..xzt.cols() {
            if xzt.get(i, j) != 0 {
                return Err(SymplError::XZtNonzero(i, j));
            }
        }
    }
    let top = x_block.hstack(&FMatrix::zeros(f, x_block.rows(), n))?;
    let bottom = FMatrix::zeros(f, z_block.rows(), n).hstack(z_block)?;
    make_stabilizer(top.vstack(&bottom)?)
}

/// Whether the row space splits as (X-only part) + (Z-only part).
///
/// `dim(V ∩ {b=0}) = dim V - rank B` and `dim(V ∩ {a=0}) = dim V - rank A`,
/// so the split holds iff `rank A + rank B = dim V`.
pub fn is_homogeneous_form(s: &StabilizerMatrix) -> bool {
    s.x_block().rank() + s.z_block().rank() == s.rows()
}

/// `[A T^{-1} | B T]` for the diagonal matrix `T = diag(t)`.
pub fn torus_action(s: &StabilizerMatrix, t: &[Residue]) -> Result<StabilizerMatrix, SymplError> {
    if t.len() != s.n {
        return Err(SymplError::LengthMismatch { expected: s.n, found: t.len() });
    }
    let f = s.field();
    let mut inverses = Vec::with_capacity(t.len());
    for (i, &ti) in t.iter().enumerate() {
        inverses.push(f.inv(ti).ok_or(SymplError::ZeroTorusEntry(i))?);
    }
    let mut gens = s.gens.clone();
    for r in 0..gens.rows() {
        for i in 0..s.n {
            gens.set(r, i, f.mul(gens.get(r, i), inverses[i]));
            gens.set(r, s.n + i, f.mul(gens.get(r, s.n + i), t[i] % f.p()));
        }
    }
    Ok(StabilizerMatrix { n: s.n, gens })
}

/// Minimum symplectic weight, by exhaustive enumeration.
///
/// With `k = 0` the minimum runs over nonzero stabilizer elements; with
/// `k > 0` over elements of the symplectic complement outside the
/// stabilizer. Returns `None` when no candidate exists (the complement equals
/// the stabilizer, which cannot happen for `k > 0`).
pub fn code_distance(s: &StabilizerMatrix, cap: u64) -> Result<Option<usize>, SymplError> {
    let n = s.n;
    let mut best: Option<usize> = None;
    if s.logical_qudits() == 0 {
        for v in s.gens.enumerate_row_space(cap)?.skip(1) {
            let w = symplectic_weight(&v[..n], &v[n..]);
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    } else {
        let stab = s.gens.echelon();
        for v in s.symplectic_complement().enumerate_row_space(cap)?.skip(1) {
            let w = symplectic_weight(&v[..n], &v[n..]);
            if best.is_none_or(|b| w < b) && !stab.contains(&v) {
                best = Some(w);
            }
        }
    }
    Ok(best)
}

/// Symbolic rendering of `X(a_1)Z(b_1) ⊗ ... ⊗ X(a_n)Z(b_n)` with the phase dropped.
///
/// Over GF(2) factors read `X3`, `Z3`, `X3Z3`; over larger fields
/// `X(2)_3`, `Z(1)_3`, `X(2)Z(1)_3`. The identity renders as `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString {
    field: FieldSpec,
    factors: Vec<(Residue, Residue)>,
}

impl PauliString {
    pub fn factors(&self) -> &[(Residue, Residue)] {
        &self.factors
    }

    pub fn to_vector(&self) -> SymplecticVector {
        let (a, b) = self.factors.iter().copied().unzip();
        SymplecticVector { field: self.field, a, b }
    }

    /// Parses a rendering back; `n` fixes the number of positions.
    pub fn parse(s: &str, field: FieldSpec, n: usize) -> Result<Self, SymplError> {
        let mut factors = vec![(0, 0); n];
        let s = s.trim();
        if s == "I" {
            return Ok(Self { field, factors });
        }
        for tok in s.split_whitespace() {
            let bad = || SymplError::BadPauli(format!("cannot read factor `{tok}`"));
            let (ops, pos) = if field.is_binary() {
                let split = tok.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
                tok.split_at(split)
            } else {
                let (ops, pos) = tok.rsplit_once('_').ok_or_else(bad)?;
                (ops, pos)
            };
            let pos: usize = pos.parse().map_err(|_| bad())?;
            if pos == 0 || pos > n {
                return Err(SymplError::BadPauli(format!("position {pos} outside 1..={n}")));
            }
            let (a, b) = parse_ops(ops, field).ok_or_else(bad)?;
            if (a, b) == (0, 0) || factors[pos - 1] != (0, 0) {
                return Err(bad());
            }
            factors[pos - 1] = (a, b);
        }
        Ok(Self { field, factors })
    }
}

fn parse_ops(ops: &str, field: FieldSpec) -> Option<(Residue, Residue)> {
    if field.is_binary() {
        return match ops {
            "X" => Some((1, 0)),
            "Z" => Some((0, 1)),
            "XZ" => Some((1, 1)),
            _ => None,
        };
    }
    let (a, rest) = match ops.strip_prefix('X') {
        Some(tail) => parse_coefficient(tail, field)?,
        None => (0, ops),
    };
    let (b, rest) = match rest.strip_prefix('Z') {
        Some(tail) => parse_coefficient(tail, field)?,
        None => (0, rest),
    };
    rest.is_empty().then_some((a, b))
}

/// Reads `(<c>)` with `c` a nonzero residue, returning it and the remainder.
fn parse_coefficient(s: &str, field: FieldSpec) -> Option<(Residue, &str)> {
    let (num, tail) = s.strip_prefix('(')?.split_once(')')?;
    let v: u32 = num.parse().ok()?;
    (v != 0 && v < field.p()).then_some((v, tail))
}

pub fn format_pauli(v: &SymplecticVector) -> PauliString {
    PauliString { field: v.field, factors: v.a.iter().copied().zip(v.b.iter().copied()).collect() }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = self.field.is_binary();
        let mut parts = Vec::new();
        for (i, &(a, b)) in self.factors.iter().enumerate() {
            if (a, b) == (0, 0) {
                continue;
            }
            let pos = i + 1;
            let s = if binary {
                match (a, b) {
                    (1, 0) => format!("X{pos}"),
                    (0, 1) => format!("Z{pos}"),
                    _ => format!("XZ{pos}"),
                }
            } else {
                let mut s = String::new();
                if a != 0 {
                    s.push_str(&format!("X({a})"));
                }
                if b != 0 {
                    s.push_str(&format!("Z({b})"));
                }
                format!("{s}_{pos}")
            };
            parts.push(s);
        }
        if parts.is_empty() {
            f.write_str("I")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}
