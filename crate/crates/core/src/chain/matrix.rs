use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::ring::{Field, LocalElement, RingError, Scalar};

/// Column-major sparse matrix over `R`. Absent entries are zero; stored
/// entries are never zero.
///
/// Products and sums panic on shape or field mismatch; those are
/// programming errors inside this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: Field,
    nrows: usize,
    cols: Vec<BTreeMap<usize, LocalElement>>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            field,
            nrows,
            cols: vec![BTreeMap::new(); ncols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::diagonal(field, vec![LocalElement::one(field); n])
    }

    pub fn diagonal(field: Field, entries: Vec<LocalElement>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(field, n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Builds from row-major dense data.
    pub fn from_rows(field: Field, ncols: usize, rows: Vec<Vec<LocalElement>>) -> Self {
        let mut m = Self::zeros(field, rows.len(), ncols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged row");
            for (j, e) in row.into_iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    /// Builds from column vectors of length `nrows`.
    pub fn from_columns(field: Field, nrows: usize, columns: Vec<Vec<LocalElement>>) -> Self {
        let mut m = Self::zeros(field, nrows, columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length");
            for (i, e) in col.into_iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&LocalElement> {
        self.cols[col].get(&row)
    }

    pub fn entry(&self, row: usize, col: usize) -> LocalElement {
        self.get(row, col)
            .cloned()
            .unwrap_or_else(|| LocalElement::zero(self.field))
    }

    pub fn set(&mut self, row: usize, col: usize, value: LocalElement) {
        assert!(row < self.nrows && col < self.cols.len(), "index out of bounds");
        assert_eq!(value.field(), self.field, "field mismatch");
        if value.is_zero() {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, value);
        }
    }

    pub(crate) fn from_column_maps(field: Field, nrows: usize, cols: Vec<BTreeMap<usize, LocalElement>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.keys().all(|&r| r < nrows)));
        SparseMatrix { field, nrows, cols }
    }

    pub(crate) fn into_column_maps(self) -> Vec<BTreeMap<usize, LocalElement>> {
        self.cols
    }

    pub fn column(&self, col: usize) -> &BTreeMap<usize, LocalElement> {
        &self.cols[col]
    }

    pub fn column_dense(&self, col: usize) -> Vec<LocalElement> {
        (0..self.nrows).map(|i| self.entry(i, col)).collect()
    }

    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LocalElement)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(&i, e)| (i, j, e)))
    }

    pub fn to_dense(&self) -> Vec<Vec<LocalElement>> {
        let mut out = vec![vec![LocalElement::zero(self.field); self.ncols()]; self.nrows];
        for (i, j, e) in self.entries() {
            out[i][j] = e.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.ncols(), self.nrows);
        for (i, j, e) in self.entries() {
            t.cols[i].insert(j, e.clone());
        }
        t
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "shape mismatch in product");
        assert_eq!(self.field, other.field, "field mismatch");
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, LocalElement> = BTreeMap::new();
                for (&k, b) in col {
                    for (&i, a) in &self.cols[k] {
                        let t = a * b;
                        match acc.get_mut(&i) {
                            Some(v) => *v = &*v + &t,
                            None => {
                                acc.insert(i, t);
                            }
                        }
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            })
            .collect();
        SparseMatrix {
            field: self.field,
            nrows: self.nrows,
            cols,
        }
    }

    pub fn mul_vec(&self, x: &[LocalElement]) -> Vec<LocalElement> {
        assert_eq!(x.len(), self.ncols(), "shape mismatch in product");
        let mut out = vec![LocalElement::zero(self.field); self.nrows];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (&i, a) in &self.cols[j] {
                out[i] = &out[i] + &(a * xj);
            }
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols()), (other.nrows, other.ncols()), "shape mismatch");
        let mut out = self.clone();
        for (i, j, e) in other.entries() {
            let v = &out.entry(i, j) - e;
            out.set(i, j, v);
        }
        out
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.nrows, other.nrows, "row count mismatch");
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        SparseMatrix {
            field: self.field,
            nrows: self.nrows,
            cols,
        }
    }

    /// Submatrix of the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> SparseMatrix {
        let position: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let cols = self
            .cols
            .iter()
            .map(|c| {
                c.iter()
                    .filter_map(|(r, e)| position.get(r).map(|&k| (k, e.clone())))
                    .collect()
            })
            .collect();
        SparseMatrix {
            field: self.field,
            nrows: rows.len(),
            cols,
        }
    }

    /// Column `k` of the result is column `order[k]` of `self`.
    pub fn select_columns(&self, order: &[usize]) -> SparseMatrix {
        SparseMatrix {
            field: self.field,
            nrows: self.nrows,
            cols: order.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Row `k` of the result is row `order[k]` of `self`.
    pub fn permute_rows(&self, order: &[usize]) -> SparseMatrix {
        assert_eq!(order.len(), self.nrows);
        self.select_rows(order)
    }

    /// Entrywise constant terms, row-major.
    pub fn residue(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.ncols()]; self.nrows];
        for (i, j, e) in self.entries() {
            out[i][j] = e.residue();
        }
        out
    }

    /// Each stored entry as `(row, col, valuation, unit part)`.
    pub fn split_units(&self) -> impl Iterator<Item = (usize, usize, u32, LocalElement)> + '_ {
        self.entries().map(|(i, j, e)| {
            let (k, u) = e.split_unit().expect("stored entries are nonzero");
            (i, j, k, u)
        })
    }

    /// One line per nonzero entry: `row col coefficient`, column-major.
    pub fn dump(&self, row_labels: &[String], col_labels: &[String]) -> String {
        let mut out = String::new();
        for (i, j, e) in self.entries() {
            let _ = writeln!(out, "{} {} {}", row_labels[i], col_labels[j], e);
        }
        out
    }

    /// Inverse of [`SparseMatrix::dump`]. Labels must not contain spaces.
    pub fn parse_dump(
        text: &str,
        field: Field,
        row_labels: &[String],
        col_labels: &[String],
    ) -> Result<SparseMatrix, RingError> {
        let mut m = Self::zeros(field, row_labels.len(), col_labels.len());
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = |what: &str| RingError::Parse {
                position: lineno,
                message: format!("line {}: {what}", lineno + 1),
            };
            let mut parts = line.splitn(3, ' ');
            let (r, c, v) = match (parts.next(), parts.next(), parts.next()) {
                (Some(r), Some(c), Some(v)) => (r, c, v),
                _ => return Err(bad("expected three fields")),
            };
            let i = row_labels.iter().position(|l| l == r).ok_or_else(|| bad("unknown row"))?;
            let j = col_labels.iter().position(|l| l == c).ok_or_else(|| bad("unknown column"))?;
            m.set(i, j, LocalElement::parse(v, field)?);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn el(s: &str) -> LocalElement {
        LocalElement::parse(s, Q).unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::from_rows(Q, 2, vec![vec![el("1"), el("pi")], vec![el("0"), el("2")]]);
        let b = SparseMatrix::identity(Q, 2);
        assert_eq!(a.mul(&b), a);
        assert_eq!(a.transpose().transpose(), a);
        let sq = a.mul(&a);
        assert_eq!(sq.entry(0, 1), el("3*pi"));
        assert_eq!(a.mul_vec(&[el("1"), el("1")]), vec![el("1 + pi"), el("2")]);
        assert_eq!(a.nnz(), 3);
    }

    #[test]
    fn dump_round_trip() {
        let a = SparseMatrix::from_rows(Q, 2, vec![vec![el("pi^3 + 2*pi^4"), el("0")], vec![el("-1"), el("(1 + pi)/(1 - pi)")]]);
        let rows = vec!["AB".to_string(), "AC".to_string()];
        let cols = vec!["ABC".to_string(), "ACD".to_string()];
        let text = a.dump(&rows, &cols);
        assert_eq!(text.lines().next().unwrap(), "AB ABC pi^3 + 2*pi^4");
        assert_eq!(SparseMatrix::parse_dump(&text, Q, &rows, &cols).unwrap(), a);
    }
}
