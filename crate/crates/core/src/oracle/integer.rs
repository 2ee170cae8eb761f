use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chain::integer_boundary;
use crate::complex::WeightedComplex;
use crate::linalg::IntMatrix;

/// `H_n(X; Z)` of the unweighted complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerHomology {
    pub rank: usize,
    /// Invariant factors greater than one, ascending.
    pub torsion: Vec<BigInt>,
}

/// Integer homology by plain gcd elimination, kept separate from the
/// transform-tracking integer Smith form so the two can check each other.
pub fn integer_homology(x: &WeightedComplex, n: usize) -> IntegerHomology {
    let dn = diagonalize(integer_boundary(x, n), x.count(n));
    let next_cols = if x.dim().is_some_and(|d| n < d) { x.count(n + 1) } else { 0 };
    let dn1 = if next_cols == 0 { Vec::new() } else { diagonalize(integer_boundary(x, n + 1), next_cols) };
    let rank = x.count(n) - dn.len() - dn1.len();
    let torsion = invariant_factors(dn1).into_iter().filter(|d| !d.is_one()).collect();
    IntegerHomology { rank, torsion }
}

/// Nonzero diagonal (in absolute value) of some diagonal form of `a`.
fn diagonalize(mut a: IntMatrix, ncols: usize) -> Vec<BigInt> {
    let nrows = a.len();
    let mut diag = Vec::new();
    for k in 0..nrows.min(ncols) {
        let Some((pi, pj)) = (k..nrows).flat_map(|i| (k..ncols).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut changed = false;
            for i in k + 1..nrows {
                if !a[i][k].is_zero() {
                    combine_rows(&mut a, k, i);
                    changed = true;
                }
            }
            for j in k + 1..ncols {
                if !a[k][j].is_zero() {
                    combine_cols(&mut a, k, j);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(a[k][k].abs());
    }
    diag
}

/// Unimodular row operation on rows `k` and `i` leaving `gcd` at `(k, k)`
/// and zero at `(i, k)`.
fn combine_rows(a: &mut IntMatrix, k: usize, i: usize) {
    let (p, q) = (a[k][k].clone(), a[i][k].clone());
    let (g, s, t) = bezout(&p, &q);
    let (pg, qg) = (&p / &g, &q / &g);
    for j in 0..a[k].len() {
        let (u, v) = (a[k][j].clone(), a[i][j].clone());
        a[k][j] = &s * &u + &t * &v;
        a[i][j] = &pg * &v - &qg * &u;
    }
}

fn combine_cols(a: &mut IntMatrix, k: usize, j: usize) {
    let (p, q) = (a[k][k].clone(), a[k][j].clone());
    let (g, s, t) = bezout(&p, &q);
    let (pg, qg) = (&p / &g, &q / &g);
    for row in a.iter_mut() {
        let (u, v) = (row[k].clone(), row[j].clone());
        row[k] = &s * &u + &t * &v;
        row[j] = &pg * &v - &qg * &u;
    }
}

/// `(g, s, t)` with `g = s*p + t*q`. Exact division short-circuits to
/// `(p, 1, 0)` so a pivot that already divides stays put.
fn bezout(p: &BigInt, q: &BigInt) -> (BigInt, BigInt, BigInt) {
    if (q % p).is_zero() {
        return (p.clone(), BigInt::one(), BigInt::zero());
    }
    let e = p.extended_gcd(q);
    (e.gcd, e.x, e.y)
}

/// Turns any diagonal into the divisibility chain by repeated gcd/lcm
/// exchange.
fn invariant_factors(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d.sort();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixture_examples() {
        let rp2 = integer_homology(&fixtures::rp2(), 1);
        assert_eq!(rp2, IntegerHomology { rank: 0, torsion: vec![BigInt::from(2)] });
        assert_eq!(integer_homology(&fixtures::rp2(), 2).rank, 0);
        assert_eq!(integer_homology(&fixtures::rp2(), 0).rank, 1);
        let kite = integer_homology(&fixtures::kite(), 1);
        assert_eq!(kite, IntegerHomology { rank: 1, torsion: vec![] });
        assert_eq!(integer_homology(&fixtures::sphere(), 2), IntegerHomology { rank: 1, torsion: vec![] });
        let torus = fixtures::torus();
        assert_eq!(integer_homology(&torus, 1), IntegerHomology { rank: 2, torsion: vec![] });
        assert_eq!(integer_homology(&torus, 2).rank, 1);
    }

    #[test]
    fn gcd_lcm_normalization() {
        let d = invariant_factors([4, 6, 1].map(BigInt::from).to_vec());
        assert_eq!(d, [1, 2, 12].map(BigInt::from).to_vec());
    }

    #[test]
    fn diagonal_form_of_small_matrix() {
        let m: IntMatrix = vec![vec![2.into(), 4.into()], vec![6.into(), 8.into()]];
        let d = invariant_factors(diagonalize(m, 2));
        assert_eq!(d, [2, 4].map(BigInt::from).to_vec());
    }
}
