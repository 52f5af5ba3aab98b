use std::fmt;

use super::field::{FieldSpec, Residue};
use super::gf2;
use super::FfError;

/// Default bound on the number of vectors a row-space enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 22;

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Residue>,
}

impl FMatrix {
    /// Builds a matrix from residues already in `[0, p)`.
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Residue>) -> Result<Self, FfError> {
        if entries.len() != rows * cols {
            return Err(FfError::Shape { expected: rows * cols, found: entries.len() });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= field.p()) {
            return Err(FfError::EntryOutOfRange { entry: bad, p: field.p() });
        }
        Ok(Self { field, rows, cols, entries })
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: FieldSpec, rows: &[R]) -> Result<Self, FfError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_rows_with_cols(field, cols, rows)
    }

    /// Same as [`FMatrix::from_rows`] but with an explicit column count, so
    /// zero-row matrices keep their width.
    pub fn from_rows_with_cols<R: AsRef<[i64]>>(field: FieldSpec, cols: usize, rows: &[R]) -> Result<Self, FfError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(FfError::Shape { expected: cols, found: r.len() });
            }
            entries.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Self { field, rows: rows.len(), cols, entries })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Residue {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Residue) {
        self.entries[r * self.cols + c] = value % self.field.p();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Residue] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Residue]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[Residue] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FfError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(FfError::DimensionMismatch { what: "matrix product", left: self.cols, right: other.rows });
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = f.add(out.entries[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Columns `[start, end)` as a new matrix.
    pub fn column_block(&self, start: usize, end: usize) -> Self {
        let cols: Vec<usize> = (start..end).collect();
        self.select_columns_unchecked(&cols)
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, FfError> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(FfError::DimensionMismatch { what: "horizontal stack", left: self.rows, right: other.rows });
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        Ok(Self { field: self.field, rows: self.rows, cols, entries })
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, FfError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(FfError::DimensionMismatch { what: "vertical stack", left: self.cols, right: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub(crate) fn select_columns_unchecked(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            entries.extend(cols.iter().map(|&c| row[c]));
        }
        Self { field: self.field, rows: self.rows, cols: cols.len(), entries }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<Self, FfError> {
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(FfError::ColumnOutOfRange { index: c, cols: self.cols });
        }
        Ok(self.select_columns_unchecked(cols))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        Self { field: self.field, rows: rows.len(), cols: self.cols, entries }
    }

    pub(crate) fn same_field(&self, other: &Self) -> Result<(), FfError> {
        if self.field != other.field {
            return Err(FfError::FieldMismatch { left: self.field.p(), right: other.field.p() });
        }
        Ok(())
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.field.is_binary() {
            let mut packed = gf2::pack_rows(self);
            return gf2::rank_in_place(&mut packed);
        }
        self.echelon().rank()
    }

    /// Reduced row-echelon form of the row space (zero rows dropped).
    pub fn echelon(&self) -> Echelon {
        Echelon::of(self)
    }

    /// Whether the square submatrix on the given columns is invertible.
    ///
    /// Requires exactly `rows` distinct in-range column indices.
    pub fn submatrix_det_nonzero(&self, cols: &[usize]) -> Result<bool, FfError> {
        if cols.len() != self.rows {
            return Err(FfError::WrongCardinality { expected: self.rows, found: cols.len() });
        }
        for (i, &c) in cols.iter().enumerate() {
            if c >= self.cols {
                return Err(FfError::ColumnOutOfRange { index: c, cols: self.cols });
            }
            if cols[..i].contains(&c) {
                return Err(FfError::RepeatedColumn(c));
            }
        }
        Ok(MinorOracle::new(self).is_nonsingular(cols))
    }

    /// Whether two matrices span the same row space.
    pub fn row_space_equal(&self, other: &Self) -> Result<bool, FfError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(FfError::DimensionMismatch {
                what: "row space comparison",
                left: self.cols,
                right: other.cols,
            });
        }
        Ok(self.echelon() == other.echelon())
    }

    /// Lazily enumerates the row space, zero vector first.
    pub fn enumerate_row_space(&self, cap: u64) -> Result<RowSpaceIter, FfError> {
        RowSpaceIter::new(self.echelon(), cap)
    }

    /// Basis of the right kernel `{x : M x = 0}`, as the rows of the result.
    pub fn nullspace(&self) -> Self {
        let f = self.field;
        let ech = self.echelon();
        let pivots = ech.pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.entries[i * self.cols + fc] = 1;
            for (row, &pc) in ech.rows.iter().zip(pivots) {
                out.entries[i * self.cols + pc] = f.neg(row[fc]);
            }
        }
        out
    }
}

impl fmt::Display for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon basis of a row space.
///
/// Two matrices have equal row spaces exactly when their `Echelon`s are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<Residue>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn of(m: &FMatrix) -> Self {
        let f = m.field;
        let mut rows: Vec<Vec<Residue>> = m.row_iter().map(|r| r.to_vec()).collect();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            let Some(pr) = (lead..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(lead, pr);
            let inv = f.inv(rows[lead][col]).expect("nonzero pivot");
            for x in rows[lead].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot_row = rows[lead].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == lead || row[col] == 0 {
                    continue;
                }
                let factor = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, pv));
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == rows.len() {
                break;
            }
        }
        rows.truncate(lead);
        Self { field: f, cols: m.cols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> FMatrix {
        let entries = self.rows.concat();
        FMatrix { field: self.field, rows: self.rows.len(), cols: self.cols, entries }
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, v: &mut [Residue]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            for (x, &rv) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, rv));
            }
        }
    }

    pub fn contains(&self, v: &[Residue]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

/// Repeated invertibility tests of square column selections of one matrix.
///
/// Over GF(2) with at most 64 rows each column is packed into a single word
/// and the test is an XOR basis insertion; otherwise a small dense
/// elimination runs per query.
pub struct MinorOracle<'a> {
    matrix: &'a FMatrix,
    packed_columns: Option<Vec<u64>>,
}

impl<'a> MinorOracle<'a> {
    pub fn new(matrix: &'a FMatrix) -> Self {
        let packed_columns = (matrix.field.is_binary() && matrix.rows <= 64).then(|| gf2::pack_columns(matrix));
        Self { matrix, packed_columns }
    }

    /// `cols` must hold `rows` distinct valid indices.
    pub fn is_nonsingular(&self, cols: &[usize]) -> bool {
        let m = self.matrix;
        debug_assert_eq!(cols.len(), m.rows);
        if let Some(packed) = &self.packed_columns {
            return gf2::columns_independent(cols.iter().map(|&c| packed[c]));
        }
        let f = m.field;
        let k = cols.len();
        let mut a: Vec<Residue> = Vec::with_capacity(k * k);
        for r in 0..k {
            let row = m.row(r);
            a.extend(cols.iter().map(|&c| row[c]));
        }
        for col in 0..k {
            let Some(pr) = (col..k).find(|&r| a[r * k + col] != 0) else {
                return false;
            };
            if pr != col {
                for j in 0..k {
                    a.swap(pr * k + j, col * k + j);
                }
            }
            let inv = f.inv(a[col * k + col]).expect("nonzero pivot");
            for r in col + 1..k {
                let factor = f.mul(a[r * k + col], inv);
                if factor == 0 {
                    continue;
                }
                for j in col..k {
                    a[r * k + j] = f.sub(a[r * k + j], f.mul(factor, a[col * k + j]));
                }
            }
        }
        true
    }
}

/// Odometer over all GF(p) combinations of an echelon basis.
pub struct RowSpaceIter {
    field: FieldSpec,
    basis: Vec<Vec<Residue>>,
    digits: Vec<Residue>,
    current: Vec<Residue>,
    remaining: u64,
}

impl RowSpaceIter {
    fn new(ech: Echelon, cap: u64) -> Result<Self, FfError> {
        let size = (ech.field.p() as u64)
            .checked_pow(ech.rank() as u32)
            .filter(|&s| s <= cap)
            .ok_or(FfError::CapExceeded { p: ech.field.p(), dimension: ech.rank(), cap })?;
        Ok(Self {
            field: ech.field,
            digits: vec![0; ech.rows.len()],
            current: vec![0; ech.cols],
            basis: ech.rows,
            remaining: size,
        })
    }

    /// Number of vectors this iterator yields in total.
    pub fn len_total(&self) -> u64 {
        (self.field.p() as u64).pow(self.basis.len() as u32)
    }
}

impl Iterator for RowSpaceIter {
    type Item = Vec<Residue>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current.clone();
        if self.remaining > 0 {
            let f = self.field;
            for (digit, row) in self.digits.iter_mut().zip(&self.basis) {
                for (x, &r) in self.current.iter_mut().zip(row) {
                    *x = f.add(*x, r);
                }
                *digit += 1;
                if *digit < f.p() {
                    break;
                }
                *digit = 0;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FMatrix::identity(gf(2), 3).rank(), 3);
        assert_eq!(FMatrix::zeros(gf(3), 2, 4).rank(), 0);
        let k3 = FMatrix::from_rows(gf(2), &[[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap();
        assert_eq!(k3.rank(), 2);
        // same pattern over GF(3) has det 2, full rank
        let k3 = FMatrix::from_rows(gf(3), &[[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap();
        assert_eq!(k3.rank(), 3);
    }

    #[test]
    fn wide_binary_rank_spans_multiple_words() {
        let f = gf(2);
        let cols = 150;
        let mut rows = vec![vec![0i64; cols]; 3];
        rows[0][140] = 1;
        rows[1][3] = 1;
        rows[1][140] = 1;
        rows[2][3] = 1;
        let m = FMatrix::from_rows(f, &rows).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn minors_of_path_representation() {
        let m = FMatrix::from_rows(gf(2), &[[1, 0, 0, 0, 1, 1], [0, 1, 0, 1, 0, 0], [0, 0, 1, 1, 0, 0]]).unwrap();
        assert!(m.submatrix_det_nonzero(&[0, 1, 2]).unwrap());
        assert!(!m.submatrix_det_nonzero(&[3, 4, 5]).unwrap());
        assert_eq!(m.submatrix_det_nonzero(&[0, 0, 1]), Err(FfError::RepeatedColumn(0)));
        assert!(matches!(m.submatrix_det_nonzero(&[0, 1]), Err(FfError::WrongCardinality { expected: 3, found: 2 })));
        assert!(matches!(m.submatrix_det_nonzero(&[0, 1, 6]), Err(FfError::ColumnOutOfRange { index: 6, .. })));
    }

    #[test]
    fn minors_over_gf3_use_dense_path() {
        let m = FMatrix::from_rows(gf(3), &[[1, 1, 2], [1, 2, 0]]).unwrap();
        // det [[1,1],[1,2]] = 1, det [[1,2],[1,0]] = -2 = 1, det [[1,2],[2,0]] = -4 = 2
        assert!(m.submatrix_det_nonzero(&[0, 1]).unwrap());
        assert!(m.submatrix_det_nonzero(&[0, 2]).unwrap());
        assert!(m.submatrix_det_nonzero(&[1, 2]).unwrap());
        let singular = FMatrix::from_rows(gf(3), &[[1, 2], [2, 1]]).unwrap();
        assert!(!singular.submatrix_det_nonzero(&[0, 1]).unwrap());
    }

    #[test]
    fn row_space_equality() {
        let f = gf(2);
        let a = FMatrix::from_rows(f, &[[1, 0], [0, 1]]).unwrap();
        let b = FMatrix::from_rows(f, &[[1, 1], [0, 1]]).unwrap();
        assert!(a.row_space_equal(&b).unwrap());
        let swapped = FMatrix::from_rows(f, &[[0, 1], [1, 0]]).unwrap();
        assert!(a.row_space_equal(&swapped).unwrap());
        let l1 = FMatrix::from_rows(f, &[[1, 0]]).unwrap();
        let l2 = FMatrix::from_rows(f, &[[0, 1]]).unwrap();
        assert!(!l1.row_space_equal(&l2).unwrap());
        let g3 = FMatrix::from_rows(gf(3), &[[1, 0]]).unwrap();
        assert!(matches!(l1.row_space_equal(&g3), Err(FfError::FieldMismatch { .. })));
    }

    #[test]
    fn row_space_enumeration_examples() {
        let m = FMatrix::from_rows(gf(2), &[[1, 0]]).unwrap();
        let v: Vec<_> = m.enumerate_row_space(DEFAULT_ENUMERATION_CAP).unwrap().collect();
        assert_eq!(v, vec![vec![0, 0], vec![1, 0]]);

        let m = FMatrix::from_rows(gf(3), &[[1]]).unwrap();
        let v: Vec<_> = m.enumerate_row_space(DEFAULT_ENUMERATION_CAP).unwrap().collect();
        assert_eq!(v, vec![vec![0], vec![1], vec![2]]);

        let m = FMatrix::from_rows(gf(2), &[[1, 1, 0, 0], [0, 1, 1, 1], [1, 0, 1, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        let it = m.enumerate_row_space(DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(it.len_total(), 4);
        assert_eq!(it.count(), 4);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let m = FMatrix::identity(gf(3), 5);
        assert!(matches!(m.enumerate_row_space(242), Err(FfError::CapExceeded { .. })));
        assert_eq!(m.enumerate_row_space(243).unwrap().count(), 243);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = FMatrix::from_rows(gf(5), &[[1, 2, 3, 4], [0, 1, 1, 0]]).unwrap();
        let k = m.nullspace();
        assert_eq!(k.rows(), 2);
        assert_eq!(k.rank(), 2);
        assert!(m.mul(&k.transpose()).unwrap().is_zero());
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(FMatrix::new(gf(2), 2, 2, vec![0, 1, 1]), Err(FfError::Shape { .. })));
        assert!(matches!(FMatrix::new(gf(2), 1, 2, vec![0, 2]), Err(FfError::EntryOutOfRange { entry: 2, p: 2 })));
    }
}
