use std::collections::BTreeMap;

use crate::chain::SparseMatrix;
use crate::ring::LocalElement;

/// A pivot chosen by [`reduce_columns`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub row: usize,
    pub col: usize,
    pub valuation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    /// `input * transform`.
    pub reduced: SparseMatrix,
    /// Unimodular column transform.
    pub transform: SparseMatrix,
    /// Pivots in the order they were selected.
    pub pivots: Vec<Pivot>,
}

impl ReductionResult {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_row_of(&self, col: usize) -> Option<usize> {
        self.pivots.iter().find(|p| p.col == col).map(|p| p.row)
    }

    /// Columns that were reduced to zero, ascending.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.reduced.ncols())
            .filter(|&j| self.pivot_row_of(j).is_none())
            .collect()
    }

    /// Columns holding a pivot, ascending.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pivots.iter().map(|p| p.col).collect();
        v.sort_unstable();
        v
    }
}

type Column = BTreeMap<usize, LocalElement>;

fn axpy(target: &mut Column, q: &LocalElement, source: &Column) {
    // target -= q * source
    for (&i, a) in source {
        let t = q * a;
        let v = match target.get(&i) {
            Some(old) => old - &t,
            None => -t,
        };
        if v.is_zero() {
            target.remove(&i);
        } else {
            target.insert(i, v);
        }
    }
}

/// Column reduction with valuation-minimal pivots.
///
/// Each step takes the entry of least valuation among unused rows and
/// still-active columns (ties: lowest row, then lowest column), then clears
/// that row from every other active column. Only column operations are
/// used, so the chosen pivot valuations are exactly the Smith exponents.
pub fn reduce_columns(m: &SparseMatrix) -> ReductionResult {
    let field = m.field();
    let nrows = m.nrows();
    let ncols = m.ncols();
    let mut cols = m.clone().into_column_maps();
    let mut transform: Vec<Column> = (0..ncols)
        .map(|j| BTreeMap::from([(j, LocalElement::one(field))]))
        .collect();
    let mut active = vec![true; ncols];
    let mut row_used = vec![false; nrows];
    let mut pivots = Vec::new();
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for (j, col) in cols.iter().enumerate() {
            if !active[j] {
                continue;
            }
            for (&i, e) in col {
                if row_used[i] {
                    continue;
                }
                let v = e.valuation().finite().expect("stored entries are nonzero");
                if best.is_none_or(|b| (v, i, j) < b) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((valuation, row, col)) = best else { break };
        active[col] = false;
        row_used[row] = true;
        pivots.push(Pivot { row, col, valuation });
        let pivot_col = cols[col].clone();
        let pivot_tr = transform[col].clone();
        let pivot = pivot_col[&row].clone();
        for j in 0..ncols {
            if !active[j] {
                continue;
            }
            let Some(a) = cols[j].get(&row) else { continue };
            let q = a.divide_exact(&pivot).expect("pivot has least valuation in its row");
            axpy(&mut cols[j], &q, &pivot_col);
            axpy(&mut transform[j], &q, &pivot_tr);
        }
    }
    ReductionResult {
        reduced: SparseMatrix::from_column_maps(field, nrows, cols),
        transform: SparseMatrix::from_column_maps(field, ncols, transform),
        pivots,
    }
}
