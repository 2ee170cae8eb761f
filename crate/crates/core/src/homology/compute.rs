use std::collections::BTreeMap;

use super::{check_dim, HomologyError, ModuleInvariants, PairEntry, TorsionPairing};
use crate::chain::{boundary_matrix, field_boundary, SparseMatrix};
use crate::complex::WeightedComplex;
use crate::homology::kappa_mu_split;
use crate::linalg::{field, reduce_columns, smith_normal_form};

/// Rows of the next boundary restricted to kappa: the image of
/// `d_(n+1)` written in the coordinates of the kappa cycle basis.
pub(crate) fn boundaries_in_basis(x: &WeightedComplex, n: usize) -> Result<(Vec<usize>, SparseMatrix), HomologyError> {
    let split = kappa_mu_split(x, n, None)?;
    let b = boundary_matrix(x, n + 1).select_rows(&split.kappa);
    Ok((split.kappa, b))
}

/// `ker d_n / im d_(n+1)` by Smith form of the boundaries in cycle-basis
/// coordinates.
pub fn homology_direct(x: &WeightedComplex, n: usize) -> Result<ModuleInvariants, HomologyError> {
    check_dim(x, n)?;
    let (kappa, b) = boundaries_in_basis(x, n)?;
    let snf = smith_normal_form(&b);
    Ok(ModuleInvariants::new(kappa.len() - snf.rank(), snf.exponents))
}

/// Dimension of `H_n(X; F)` by classical elimination over the residue field.
pub fn field_homology_rank(x: &WeightedComplex, n: usize) -> usize {
    let cycles = x.count(n) - field::rank(&field_boundary(x, n));
    cycles - field::rank(&field_boundary(x, n + 1))
}

/// Homology through the structure theorem: rank from the residue field,
/// torsion from a pairing of kappa `n`-simplices with mu `(n+1)`-simplices
/// whose exponents are weight differences.
pub fn homology_structure(
    x: &WeightedComplex,
    n: usize,
) -> Result<(ModuleInvariants, TorsionPairing), HomologyError> {
    check_dim(x, n)?;
    let rank = field_homology_rank(x, n);
    let (kappa, b) = boundaries_in_basis(x, n)?;
    let wk = x.weights(n);
    let wm = x.weights(n + 1);
    let red = reduce_columns(&b);
    let mut pairs: Vec<PairEntry> = red
        .pivots
        .iter()
        .map(|p| PairEntry {
            kappa: kappa[p.row],
            mu: p.col,
            exponent: wk[kappa[p.row]] - wm[p.col],
        })
        .collect();
    let mut target = smith_normal_form(&b).exponents;
    target.sort_unstable();
    if sorted_exponents(&pairs) != target || red.pivots.iter().zip(&pairs).any(|(p, q)| p.valuation != q.exponent) {
        let mus = red.pivot_columns();
        pairs = match_by_weights(&kappa, &mus, x, n, &target)
            .ok_or_else(|| HomologyError::PairingFailed(format!("no matching realizes exponents {target:?}")))?;
    }
    pairs.sort();
    let paired: Vec<usize> = pairs.iter().map(|p| p.kappa).collect();
    let free_kappas = kappa.iter().copied().filter(|k| !paired.contains(k)).collect();
    let pairing = TorsionPairing { n, pairs, free_kappas };
    Ok((pairing.invariants(rank), pairing))
}

fn sorted_exponents(pairs: &[PairEntry]) -> Vec<u32> {
    let mut v: Vec<u32> = pairs.iter().map(|p| p.exponent).collect();
    v.sort_unstable();
    v
}

/// Bipartite matching of `mus` into `kappas` whose weight differences use up
/// exactly the multiset `target`. Heavier mu-simplices are placed first.
pub(crate) fn match_by_weights(
    kappas: &[usize],
    mus: &[usize],
    x: &WeightedComplex,
    n: usize,
    target: &[u32],
) -> Option<Vec<PairEntry>> {
    let wk = x.weights(n);
    let wm = x.weights(n + 1);
    let mut order = mus.to_vec();
    order.sort_by_key(|&m| std::cmp::Reverse(wm[m]));
    let mut budget: BTreeMap<u32, usize> = BTreeMap::new();
    for &e in target {
        *budget.entry(e).or_default() += 1;
    }
    let mut used = vec![false; kappas.len()];
    let mut out = Vec::new();
    fn go(
        i: usize,
        order: &[usize],
        kappas: &[usize],
        wk: &[u32],
        wm: &[u32],
        budget: &mut BTreeMap<u32, usize>,
        used: &mut [bool],
        out: &mut Vec<PairEntry>,
    ) -> bool {
        let Some(&m) = order.get(i) else { return true };
        for (slot, &k) in kappas.iter().enumerate() {
            if used[slot] || wk[k] < wm[m] {
                continue;
            }
            let e = wk[k] - wm[m];
            let Some(c) = budget.get_mut(&e).filter(|c| **c > 0) else { continue };
            *c -= 1;
            used[slot] = true;
            out.push(PairEntry { kappa: k, mu: m, exponent: e });
            if go(i + 1, order, kappas, wk, wm, budget, used, out) {
                return true;
            }
            out.pop();
            used[slot] = false;
            *budget.get_mut(&e).unwrap() += 1;
        }
        false
    }
    go(0, &order, kappas, wk, wm, &mut budget, &mut used, &mut out).then_some(out)
}
