//! Labelled rectangular matrices, generic over the scalar type.
//!
//! The text format used by the CLI and fixtures is implemented for the
//! rational instantiation: first line `rows cols`, then one line per row of
//! whitespace-separated rationals written `p` or `p/q`; lines starting with
//! `#` are comments and are ignored. Round-trips are exact.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Scalar};
use crate::Rational;

/// Rectangular matrix with row/column labels, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl<T> Matrix<T> {
    /// Build from explicit row-major entries. `entries.len()` must equal
    /// `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
            row_labels: default_labels("r", rows),
            col_labels: default_labels("c", cols),
        })
    }

    /// Build from a list of equal-length rows. An empty list gives the 0x0
    /// matrix; use [`Matrix::from_entries`] for an `0xn` matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected {ncols} entries, found {}",
                bad.len()
            )));
        }
        Self::from_entries(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::from_entries(rows, cols, entries).expect("entry count matches by construction")
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        assert!(r < self.rows, "row {r} out of range");
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn with_row_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} row labels for {} rows",
                labels.len(),
                self.rows
            )));
        }
        self.row_labels = labels;
        Ok(self)
    }

    pub fn with_col_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} column labels for {} columns",
                labels.len(),
                self.cols
            )));
        }
        self.col_labels = labels;
        Ok(self)
    }

    /// Entrywise equality ignoring labels.
    pub fn same_entries(&self, other: &Self) -> bool
    where
        T: PartialEq,
    {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }

    pub fn column(&self, c: usize) -> Vec<T>
    where
        T: Clone,
    {
        assert!(c < self.cols, "column {c} out of range");
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    /// Matrix product; labels come from the left factor's rows and the right
    /// factor's columns.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                if !self.entry(r, k).is_zero() && !other.entry(k, c).is_zero() {
                    acc = acc + self.entry(r, k).clone() * other.entry(k, c).clone();
                }
            }
            acc
        });
        out.row_labels = self.row_labels.clone();
        out.col_labels = other.col_labels.clone();
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self
            .iter_rows()
            .map(|row| {
                let mut acc = T::zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect())
    }

    /// Multiply column `c` by `diag[c]` for each column; equivalent to
    /// right-multiplication by the diagonal matrix of `diag`. Labels are kept.
    pub fn scale_columns(&self, diag: &[T]) -> Result<Self> {
        if diag.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} diagonal entries for {} columns",
                diag.len(),
                self.cols
            )));
        }
        let mut out = Self::from_fn(self.rows, self.cols, |r, c| {
            self.entry(r, c).clone() * diag[c].clone()
        });
        out.row_labels = self.row_labels.clone();
        out.col_labels = self.col_labels.clone();
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.entry(r, c).clone()
            } else {
                other.entry(r, c - self.cols).clone()
            }
        });
        out.row_labels = self.row_labels.clone();
        out.col_labels = self
            .col_labels
            .iter()
            .chain(other.col_labels.iter())
            .cloned()
            .collect();
        Ok(out)
    }
}

impl Matrix<Rational> {
    /// Parse the matrix text format. Comment lines (leading `#`) and blank
    /// lines are skipped anywhere in the input.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut data = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = data.next().ok_or(Error::Parse {
            line: 0,
            message: "empty matrix file".into(),
        })?;
        let mut dims = header.split_whitespace();
        let parse_dim = |tok: Option<&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok()).ok_or(Error::Parse {
                line: line_no,
                message: format!("expected `rows cols`, found `{header}`"),
            })
        };
        let rows = parse_dim(dims.next())?;
        let cols = parse_dim(dims.next())?;
        if dims.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `rows cols`, found `{header}`"),
            });
        }

        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (line_no, line) = data.next().ok_or(Error::Parse {
                line: 0,
                message: format!("expected {rows} rows, found {r}"),
            })?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != cols {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected {cols} entries, found {}", tokens.len()),
                });
            }
            for tok in tokens {
                entries.push(parse_rational(tok).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?);
            }
        }
        if let Some((line_no, extra)) = data.next() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("unexpected trailing content `{extra}`"),
            });
        }
        Self::from_entries(rows, cols, entries)
    }

    /// Serialize to the matrix text format (no label comments).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for row in self.iter_rows() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Like [`Matrix::to_text`] but with the labels ahead of the data as `#`
    /// comments, which the parser ignores.
    pub fn to_text_with_labels(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# columns: {}\n", self.col_labels.join(" ")));
        out.push_str(&format!("# rows: {}\n", self.row_labels.join(" ")));
        out.push_str(&self.to_text());
        out
    }
}

impl fmt::Display for Matrix<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactMatrix;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(rows: Vec<Vec<i64>>) -> ExactMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_and_indexing() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(a.row_count(), 2);
        assert_eq!(a.col_count(), 2);
        assert_eq!(*a.entry(1, 0), rat(3));
        assert_eq!(a.row(0), &[rat(1), rat(2)]);
        assert_eq!(a.column(1), vec![rat(2), rat(4)]);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![rat(1)], vec![rat(1), rat(2)]];
        assert!(ExactMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn zero_row_matrix() {
        let a: ExactMatrix = Matrix::from_entries(0, 3, vec![]).unwrap();
        assert_eq!(a.row_count(), 0);
        assert_eq!(a.col_count(), 3);
        assert_eq!(a.iter_rows().count(), 0);
    }

    #[test]
    fn product_and_column_scaling() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let d = a.scale_columns(&[rat(2), rat(-1)]).unwrap();
        assert_eq!(d, m(vec![vec![2, -2], vec![6, -4]]));
        let i = ExactMatrix::identity(2);
        assert_eq!(a.mul(&i).unwrap().same_entries(&a), true);
        assert_eq!(a.mul_vec(&[rat(1), rat(1)]).unwrap(), vec![rat(3), rat(7)]);
        assert!(a.mul_vec(&[rat(1)]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let a = ExactMatrix::from_rows(vec![
            vec![rat(1), Rational::new(1.into(), 2.into())],
            vec![rat(-3), rat(0)],
        ])
        .unwrap();
        let text = a.to_text();
        assert_eq!(text, "2 2\n1 1/2\n-3 0\n");
        let b = ExactMatrix::from_text(&text).unwrap();
        assert!(a.same_entries(&b));
        // labels live in comments and are skipped on parse
        let c = ExactMatrix::from_text(&a.to_text_with_labels()).unwrap();
        assert!(a.same_entries(&c));
    }

    #[test]
    fn text_errors() {
        assert!(ExactMatrix::from_text("").is_err());
        assert!(ExactMatrix::from_text("1\n2\n").is_err());
        assert!(ExactMatrix::from_text("1 2\n1\n").is_err());
        assert!(ExactMatrix::from_text("1 1\n1/0\n").is_err());
        assert!(ExactMatrix::from_text("1 1\n3\n4\n").is_err());
        let ok = ExactMatrix::from_text("# fixture\n2 1\n4/2\n-1\n").unwrap();
        assert_eq!(*ok.entry(0, 0), rat(2));
    }
}
