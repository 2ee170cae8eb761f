use crate::chain::SparseMatrix;
use crate::ring::{Field, LocalElement};

/// Smith normal form `U * M * V = diag(pi^e1, pi^e2, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Ascending invariant factor exponents, one per nonzero diagonal entry.
    pub exponents: Vec<u32>,
    pub left: SparseMatrix,
    pub right: SparseMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }
}

type Dense = Vec<Vec<LocalElement>>;

fn identity(field: Field, n: usize) -> Dense {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LocalElement::one(field) } else { LocalElement::zero(field) })
                .collect()
        })
        .collect()
}

fn to_sparse(field: Field, d: Dense, ncols: usize) -> SparseMatrix {
    SparseMatrix::from_rows(field, ncols, d)
}

/// Dense Smith normal form with complete valuation-minimal pivoting
/// (ties: lowest row, then lowest column). Pivots are normalized to exact
/// powers of `pi`.
pub fn smith_normal_form(m: &SparseMatrix) -> SnfResult {
    let field = m.field();
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut a = m.to_dense();
    let mut u = identity(field, nr);
    let mut v = identity(field, nc);
    let mut exponents = Vec::new();
    for k in 0..nr.min(nc) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().skip(k) {
                if let Some(val) = e.valuation().finite() {
                    if best.is_none_or(|b| (val, i, j) < b) {
                        best = Some((val, i, j));
                    }
                }
            }
        }
        let Some((e, pi, pj)) = best else { break };
        a.swap(k, pi);
        u.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for row in v.iter_mut() {
            row.swap(k, pj);
        }
        // scale row k so the pivot becomes pi^e
        let (_, unit) = a[k][k].split_unit().expect("pivot is nonzero");
        let inv = unit.invert().expect("unit part is invertible");
        for x in a[k].iter_mut().chain(u[k].iter_mut()) {
            *x = &*x * &inv;
        }
        let pivot = a[k][k].clone();
        for i in k + 1..nr {
            if a[i][k].is_zero() {
                continue;
            }
            let q = a[i][k].divide_exact(&pivot).expect("pivot is minimal");
            for j in k..nc {
                let t = &q * &a[k][j];
                a[i][j] = &a[i][j] - &t;
            }
            for j in 0..nr {
                let t = &q * &u[k][j];
                u[i][j] = &u[i][j] - &t;
            }
        }
        for j in k + 1..nc {
            if a[k][j].is_zero() {
                continue;
            }
            let q = a[k][j].divide_exact(&pivot).expect("pivot is minimal");
            a[k][j] = LocalElement::zero(field);
            for row in v.iter_mut() {
                let t = &q * &row[k];
                row[j] = &row[j] - &t;
            }
        }
        exponents.push(e);
    }
    SnfResult {
        exponents,
        left: to_sparse(field, u, nr),
        right: to_sparse(field, v, nc),
    }
}
