use crate::chain::SparseMatrix;
use crate::ring::{LocalElement, Polynomial};

use super::OracleError;

/// Largest reduced dimension the minor enumeration accepts by default.
pub const DEFAULT_MINOR_BOUND: usize = 10;

/// Invariant factor exponents from determinantal divisors: the valuation of
/// the k-th divisor is the least valuation over all k x k minors, and the
/// exponents are successive differences. Ascending.
pub fn minor_valuation_invariants(m: &SparseMatrix) -> Result<Vec<u32>, OracleError> {
    minor_valuation_invariants_bounded(m, DEFAULT_MINOR_BOUND)
}

/// As [`minor_valuation_invariants`] with an explicit size bound on the
/// matrix left after dropping zero rows and columns.
pub fn minor_valuation_invariants_bounded(m: &SparseMatrix, bound: usize) -> Result<Vec<u32>, OracleError> {
    let rows: Vec<usize> = (0..m.nrows())
        .filter(|&i| (0..m.ncols()).any(|j| m.get(i, j).is_some()))
        .collect();
    let cols: Vec<usize> = (0..m.ncols()).filter(|&j| !m.column(j).is_empty()).collect();
    if rows.len() > bound || cols.len() > bound {
        return Err(OracleError::TooLarge { rows: rows.len(), cols: cols.len(), bound });
    }
    // Scaling a row by a unit leaves every minor's valuation alone, so clear
    // denominators row by row and work in F[pi].
    let a: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|&i| {
            let row: Vec<LocalElement> = cols.iter().map(|&j| m.entry(i, j)).collect();
            let den = row
                .iter()
                .fold(Polynomial::one(m.field()), |acc, e| acc.mul(e.denominator()));
            row.iter().map(|e| e.numerator().mul(&den.div_rem(e.denominator()).0)).collect()
        })
        .collect();
    let rank = rank(a.clone());
    let val = |p: &Polynomial| p.lowest_exponent().map_or(u32::MAX, |v| v as u32);
    let row_min: Vec<u32> = a.iter().map(|row| row.iter().map(val).min().unwrap_or(u32::MAX)).collect();
    let mut exponents: Vec<u32> = Vec::new();
    let mut previous = 0u32;
    for k in 1..=rank {
        // invariant factors divide each other, so no k-minor beats this
        let floor = previous + exponents.last().copied().unwrap_or(0);
        let mut best = u32::MAX;
        'search: for r in subsets(rows.len(), k) {
            // a k-minor's valuation is at least the sum of its rows' minima
            // and of its columns' minima; skip subsets that cannot improve
            let bound = r.iter().fold(0u32, |acc, &i| acc.saturating_add(row_min[i]));
            if bound >= best {
                continue;
            }
            let sub: Vec<Vec<Polynomial>> = r.iter().map(|&i| a[i].clone()).collect();
            if rank_of(&sub) < k {
                continue;
            }
            let col_min: Vec<u32> =
                (0..cols.len()).map(|j| r.iter().map(|&i| val(&a[i][j])).min().unwrap()).collect();
            for c in subsets(cols.len(), k) {
                let bound = c.iter().fold(0u32, |acc, &j| acc.saturating_add(col_min[j]));
                if bound >= best {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = sub.iter().map(|row| c.iter().map(|&j| row[j].clone()).collect()).collect();
                if let Some(v) = determinant(minor).lowest_exponent() {
                    best = best.min(v as u32);
                    if best == floor {
                        break 'search;
                    }
                }
            }
        }
        exponents.push(best - previous);
        previous = best;
    }
    Ok(exponents)
}

/// All k-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { return out };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Fraction-free (Bareiss) elimination in F[pi] with full pivot search.
/// Returns the final pivot of each step; the last one of a square matrix
/// is its determinant up to sign.
fn bareiss(mut a: Vec<Vec<Polynomial>>) -> Vec<Polynomial> {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let Some(field) = a.first().and_then(|r| r.first()).map(Polynomial::field) else { return Vec::new() };
    let mut prev = Polynomial::one(field);
    let mut pivots = Vec::new();
    for k in 0..n.min(m) {
        let Some((pi, pj)) = (k..n).flat_map(|i| (k..m).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for i in k + 1..n {
            for j in k + 1..m {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
        pivots.push(prev.clone());
    }
    pivots
}

fn rank(a: Vec<Vec<Polynomial>>) -> usize {
    bareiss(a).len()
}

fn rank_of(a: &[Vec<Polynomial>]) -> usize {
    rank(a.to_vec())
}

fn determinant(a: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = a.len();
    let field = a[0][0].field();
    let pivots = bareiss(a);
    if pivots.len() < n {
        Polynomial::zero(field)
    } else {
        pivots[n - 1].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::smith_normal_form;
    use crate::ring::Field;

    const Q: Field = Field::Rational;

    fn mono(k: u32) -> LocalElement {
        LocalElement::monomial(Q.one(), k)
    }

    #[test]
    fn diagonal_example() {
        let m = SparseMatrix::diagonal(Q, vec![mono(1), mono(4)]);
        assert_eq!(minor_valuation_invariants(&m).unwrap(), vec![1, 4]);
    }

    #[test]
    fn determinant_small() {
        // [[1, 2], [3, 4]] has determinant -2 (up to the sign of the pivoting)
        let e = |v| Polynomial::from_i64s(Q, &[v]);
        let d = determinant(vec![vec![e(1), e(2)], vec![e(3), e(4)]]);
        assert!(d == e(-2) || d == e(2));
        let z = determinant(vec![vec![e(0), e(1)], vec![e(0), e(5)]]);
        assert!(z.is_zero());
        assert_eq!(rank(vec![vec![e(1), e(2)], vec![e(2), e(4)]]), 1);
    }

    #[test]
    fn non_monomial_entries() {
        // (1 + pi)/(1 - pi) is a unit; pi^2 (1 + pi) has valuation 2
        let u = LocalElement::parse("(1 + pi)/(1 - pi)", Q).unwrap();
        let v = LocalElement::parse("pi^2 + pi^3", Q).unwrap();
        let m = SparseMatrix::from_rows(Q, 2, vec![vec![v.clone(), u.clone()], vec![u * v.clone(), v]]);
        assert_eq!(minor_valuation_invariants(&m).unwrap(), smith_normal_form(&m).exponents);
    }

    #[test]
    fn zero_rows_do_not_count_toward_bound() {
        let mut m = SparseMatrix::zeros(Q, 30, 30);
        m.set(4, 7, mono(2));
        assert_eq!(minor_valuation_invariants(&m).unwrap(), vec![2]);
        let big = SparseMatrix::identity(Q, 11);
        assert!(matches!(minor_valuation_invariants(&big), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
