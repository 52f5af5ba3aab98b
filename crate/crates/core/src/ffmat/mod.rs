//! Exact linear algebra over prime fields GF(p).

mod field;
mod gf2;
mod matrix;

use thiserror::Error;

pub use field::{FieldSpec, Residue};
pub(crate) use gf2::word_rank;
pub use matrix::{Echelon, FMatrix, MinorOracle, RowSpaceIter, DEFAULT_ENUMERATION_CAP};

use crate::text::{self, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("NotPrime: {0} is not a prime below 65536")]
    NotPrime(u32),
    #[error("Shape: expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("EntryOutOfRange: entry {entry} is not a residue mod {p}")]
    EntryOutOfRange { entry: u32, p: u32 },
    #[error("FieldMismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("DimensionMismatch: {what} with {left} vs {right}")]
    DimensionMismatch { what: &'static str, left: usize, right: usize },
    #[error("ColumnOutOfRange: column {index} of {cols}")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("RepeatedColumn: column {0} selected twice")]
    RepeatedColumn(usize),
    #[error("WrongCardinality: need {expected} columns, got {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("CapExceeded: {p}^{dimension} vectors exceed the enumeration cap {cap}")]
    CapExceeded { p: u32, dimension: usize, cap: u64 },
}

/// Header information that may precede a matrix body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub matrix: FMatrix,
    /// Qudit count from a `stabilizer n=<n>` header, when present.
    pub stabilizer_n: Option<usize>,
}

/// Parses the matrix text format:
///
/// ```text
/// field 2
/// matrix 2 4
/// 1 0 0 1
/// 0 1 1 0
/// ```
///
/// An optional `stabilizer n=<n>` line may appear before `matrix`.
/// `default_field` is used when the file carries no `field` line.
pub fn parse_matrix(input: &str, default_field: Option<FieldSpec>) -> Result<MatrixFile, ParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut stabilizer_n = None;
    let mut lines = text::lines(input);
    let (rows, cols, header_line) = loop {
        let Some(line) = lines.next() else {
            return Err(ParseError::new(0, "missing `matrix <rows> <cols>` line"));
        };
        match line.keyword() {
            "field" => {
                line.expect_arity(1)?;
                let p = line.parse_usize(1)?;
                let p = u32::try_from(p).map_err(|_| line.error("modulus too large"))?;
                field = Some(FieldSpec::new(p).map_err(|e| line.error(e.to_string()))?);
            }
            "stabilizer" => {
                line.expect_arity(1)?;
                let n = line.tokens[1]
                    .strip_prefix("n=")
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| line.error("expected `stabilizer n=<n>`"))?;
                stabilizer_n = Some(n);
            }
            "matrix" => {
                line.expect_arity(2)?;
                break (line.parse_usize(1)?, line.parse_usize(2)?, line.number);
            }
            other => return Err(line.error(format!("unexpected keyword `{other}`"))),
        }
    };
    let field =
        field.or(default_field).ok_or_else(|| ParseError::new(header_line, "no `field` line and no default field"))?;
    let mut body: Vec<Vec<i64>> = Vec::with_capacity(rows);
    for line in lines.by_ref().take(rows) {
        if line.tokens.len() != cols {
            return Err(line.error(format!("expected {cols} entries, found {}", line.tokens.len())));
        }
        let row = line
            .tokens
            .iter()
            .map(|t| t.parse::<i64>().map_err(|_| line.error(format!("bad integer `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        body.push(row);
    }
    if body.len() != rows {
        return Err(ParseError::new(header_line, format!("expected {rows} rows, found {}", body.len())));
    }
    if let Some(extra) = lines.next() {
        return Err(extra.error("trailing content after matrix rows"));
    }
    if let Some(n) = stabilizer_n {
        if 2 * n != cols {
            return Err(ParseError::new(header_line, format!("stabilizer n={n} needs {} columns", 2 * n)));
        }
    }
    let matrix =
        FMatrix::from_rows_with_cols(field, cols, &body).map_err(|e| ParseError::new(header_line, e.to_string()))?;
    Ok(MatrixFile { matrix, stabilizer_n })
}

/// Renders a matrix in the text format accepted by [`parse_matrix`].
pub fn write_matrix(m: &FMatrix, stabilizer_n: Option<usize>) -> String {
    let mut out = String::new();
    if let Some(n) = stabilizer_n {
        out.push_str(&format!("stabilizer n={n}\n"));
    }
    out.push_str(&format!("field {}\nmatrix {} {}\n", m.field().p(), m.rows(), m.cols()));
    out.push_str(&m.to_string());
    out
}
