use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{check_dim, BasisCycle, HomologyError, KMuSplit};
use crate::chain::{boundary_matrix, SparseMatrix};
use crate::complex::WeightedComplex;
use crate::linalg::{kernel_basis, reduce_columns, MembershipSolver};
use crate::ring::LocalElement;

/// Seeded random permutation of `0..len`.
pub fn random_order(len: usize, seed: u64) -> Vec<usize> {
    let mut v: Vec<usize> = (0..len).collect();
    v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    v
}

fn resolve_order(len: usize, order: Option<&[usize]>) -> Result<Vec<usize>, HomologyError> {
    match order {
        None => Ok((0..len).collect()),
        Some(o) => {
            let mut seen = vec![false; len];
            if o.len() != len {
                return Err(HomologyError::BadOrder(len));
            }
            for &i in o {
                if i >= len || std::mem::replace(&mut seen[i], true) {
                    return Err(HomologyError::BadOrder(len));
                }
            }
            Ok(o.to_vec())
        }
    }
}

/// Splits the `n`-simplices into kappa and mu sets by valuation-pivot column
/// reduction of the weighted boundary, processing simplices in `order`
/// (`order[k]` is the simplex examined `k`-th). Pivot columns are mu.
pub fn kappa_mu_split(x: &WeightedComplex, n: usize, order: Option<&[usize]>) -> Result<KMuSplit, HomologyError> {
    check_dim(x, n)?;
    let order = resolve_order(x.count(n), order)?;
    let d = boundary_matrix(x, n).select_columns(&order);
    let red = reduce_columns(&d);
    let mut mu: Vec<usize> = red.pivot_columns().into_iter().map(|k| order[k]).collect();
    let mut kappa: Vec<usize> = red.zero_columns().into_iter().map(|k| order[k]).collect();
    mu.sort_unstable();
    kappa.sort_unstable();
    Ok(KMuSplit { n, kappa, mu })
}

/// The replace-or-keep procedure, examining simplices one at a time.
///
/// A new simplex joins mu when its boundary is independent of the current
/// mu boundaries. Otherwise the primitive relation between them decides:
/// if the new simplex has a unit coefficient it becomes kappa, else the
/// first mu-simplex with a unit coefficient is swapped out for it.
/// Much slower than [`kappa_mu_split`]; kept for differential testing.
pub fn kappa_mu_split_reference(
    x: &WeightedComplex,
    n: usize,
    order: Option<&[usize]>,
) -> Result<KMuSplit, HomologyError> {
    check_dim(x, n)?;
    let order = resolve_order(x.count(n), order)?;
    let d = boundary_matrix(x, n);
    let mut mu: Vec<usize> = Vec::new();
    let mut kappa: Vec<usize> = Vec::new();
    for &s in &order {
        let mut cols = mu.clone();
        cols.push(s);
        let relations = kernel_basis(&d.select_columns(&cols));
        match relations.first() {
            None => mu.push(s),
            Some(r) => {
                debug_assert_eq!(relations.len(), 1);
                if r[mu.len()].is_unit() {
                    kappa.push(s);
                } else {
                    let l = (0..mu.len())
                        .find(|&l| r[l].is_unit())
                        .expect("primitive relation has a unit coefficient");
                    kappa.push(mu[l]);
                    mu[l] = s;
                }
            }
        }
    }
    mu.sort_unstable();
    kappa.sort_unstable();
    Ok(KMuSplit { n, kappa, mu })
}

/// The cycle basis attached to a split: for each kappa the unique cycle
/// `kappa + sum r_mu mu`.
pub fn k_basis(x: &WeightedComplex, split: &KMuSplit) -> Vec<BasisCycle> {
    let d = boundary_matrix(x, split.n);
    let dm: SparseMatrix = d.select_columns(&split.mu);
    let solver = MembershipSolver::new(&dm);
    split
        .kappa
        .iter()
        .map(|&k| {
            let rhs: Vec<LocalElement> = d.column_dense(k).iter().map(|e| -e).collect();
            let r = solver.solve(&rhs).expect("kappa boundary lies in the R-span of mu boundaries");
            let coefficients = split
                .mu
                .iter()
                .zip(r)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&m, c)| (m, c))
                .collect();
            BasisCycle { kappa: k, coefficients }
        })
        .collect()
}
