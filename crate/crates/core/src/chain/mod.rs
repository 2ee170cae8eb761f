//! Weighted boundary matrices and the diagonal theta chain maps between two
//! weightings of the same complex.

mod matrix;

pub use matrix::SparseMatrix;

use num_bigint::BigInt;
use thiserror::Error;

use crate::complex::{Simplex, WeightedComplex, Weighting};
use crate::linalg::IntMatrix;
use crate::ring::{LocalElement, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("dimension {n} out of range 1..={top}")]
    DimensionOutOfRange { n: usize, top: usize },
    #[error("theta leaves R at {simplex}: source weight {source_weight} exceeds target weight {target_weight}")]
    RatioOutsideRing {
        simplex: Simplex,
        source_weight: u32,
        target_weight: u32,
    },
    #[error("weighting does not match the complex shape")]
    ShapeMismatch,
}

/// Matrix of the weighted boundary from `n`-chains to `(n-1)`-chains.
///
/// The entry for the `i`-th face of `s` is `(-1)^i pi^(w(face) - w(s))`.
pub fn weighted_boundary(x: &WeightedComplex, n: usize) -> Result<SparseMatrix, ChainError> {
    let top = x.dim().unwrap_or(0);
    if n == 0 || x.dim().is_none_or(|d| n > d) {
        return Err(ChainError::DimensionOutOfRange { n, top });
    }
    Ok(boundary_matrix(x, n))
}

/// Like [`weighted_boundary`] but total: `n = 0` gives the `0 x N0` map and
/// dimensions above the top give maps with no columns.
pub fn boundary_matrix(x: &WeightedComplex, n: usize) -> SparseMatrix {
    let field = x.field();
    let nrows = if n == 0 { 0 } else { x.count(n - 1) };
    let mut m = SparseMatrix::zeros(field, nrows, x.count(n));
    if n == 0 {
        return m;
    }
    for (j, (s, &w)) in x.simplices(n).iter().zip(x.weights(n)).enumerate() {
        for (negative, face) in s.faces() {
            let i = x.index_of(&face).expect("complex is closed");
            let fw = x.weights(n - 1)[i];
            debug_assert!(fw >= w);
            m.set(i, j, LocalElement::signed_power(field, negative, fw - w));
        }
    }
    m
}

/// Classical integer boundary matrix (row-major, `N(n-1) x N(n)`), ignoring
/// weights. `n = 0` gives a matrix with no rows.
pub fn integer_boundary(x: &WeightedComplex, n: usize) -> IntMatrix {
    let nrows = if n == 0 { 0 } else { x.count(n - 1) };
    let mut m = vec![vec![BigInt::from(0); x.count(n)]; nrows];
    if n == 0 {
        return m;
    }
    for (j, s) in x.simplices(n).iter().enumerate() {
        for (negative, face) in s.faces() {
            let i = x.index_of(&face).expect("complex is closed");
            m[i][j] = BigInt::from(if negative { -1 } else { 1 });
        }
    }
    m
}

/// Classical boundary over the residue field, row-major.
pub fn field_boundary(x: &WeightedComplex, n: usize) -> Vec<Vec<Scalar>> {
    let field = x.field();
    integer_boundary(x, n)
        .iter()
        .map(|row| row.iter().map(|v| field.from_bigint(v)).collect())
        .collect()
}

/// Diagonal matrix of theta on `n`-chains: `pi^(target - source)` at each
/// `n`-simplex.
pub fn theta(
    x: &WeightedComplex,
    source: &Weighting,
    target: &Weighting,
    n: usize,
) -> Result<SparseMatrix, ChainError> {
    let field = x.field();
    let (src, tgt) = (source.dim_values(n), target.dim_values(n));
    if src.len() != x.count(n) || tgt.len() != x.count(n) {
        return Err(ChainError::ShapeMismatch);
    }
    let mut diag = Vec::with_capacity(x.count(n));
    for (i, s) in x.simplices(n).iter().enumerate() {
        if src[i] > tgt[i] {
            return Err(ChainError::RatioOutsideRing {
                simplex: s.clone(),
                source_weight: src[i],
                target_weight: tgt[i],
            });
        }
        diag.push(LocalElement::signed_power(field, false, tgt[i] - src[i]));
    }
    Ok(SparseMatrix::diagonal(field, diag))
}

/// Theta maps in every dimension for a pair of weightings `source <= target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMapPair {
    pub source: Weighting,
    pub target: Weighting,
    pub maps: Vec<SparseMatrix>,
}

impl ChainMapPair {
    pub fn new(x: &WeightedComplex, source: &Weighting, target: &Weighting) -> Result<Self, ChainError> {
        let top = x.dim().map_or(0, |d| d + 1);
        let maps = (0..top)
            .map(|n| theta(x, source, target, n))
            .collect::<Result<_, _>>()?;
        Ok(ChainMapPair {
            source: source.clone(),
            target: target.clone(),
            maps,
        })
    }

    /// `other` after `self`; requires `self.target == other.source`.
    pub fn then(&self, other: &ChainMapPair) -> ChainMapPair {
        assert_eq!(self.target, other.source, "maps do not compose");
        ChainMapPair {
            source: self.source.clone(),
            target: other.target.clone(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| b.mul(a)).collect(),
        }
    }
}

/// True iff consecutive weighted boundaries compose to zero exactly.
pub fn check_chain_complex(x: &WeightedComplex) -> bool {
    let Some(top) = x.dim() else { return true };
    (2..=top).all(|n| boundary_matrix(x, n - 1).mul(&boundary_matrix(x, n)).is_zero())
}

/// True iff `theta_{n-1} . d_source = d_target . theta_n` for every `n`.
pub fn check_naturality(
    x: &WeightedComplex,
    source: &Weighting,
    target: &Weighting,
) -> Result<bool, ChainError> {
    let Some(top) = x.dim() else { return Ok(true) };
    let xs = x.with_weighting(source).map_err(|_| ChainError::ShapeMismatch)?;
    let xt = x.with_weighting(target).map_err(|_| ChainError::ShapeMismatch)?;
    for n in 1..=top {
        let lhs = theta(x, source, target, n - 1)?.mul(&boundary_matrix(&xs, n));
        let rhs = boundary_matrix(&xt, n).mul(&theta(x, source, target, n)?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Simplex labels of dimension `n`, for dumps and reports.
pub fn labels(x: &WeightedComplex, n: usize) -> Vec<String> {
    x.simplices(n).iter().map(|s| x.label(s)).collect()
}

/// Debug dump of the weighted boundary in dimension `n`.
pub fn dump_boundary(x: &WeightedComplex, n: usize) -> String {
    let rows = if n == 0 { Vec::new() } else { labels(x, n - 1) };
    boundary_matrix(x, n).dump(&rows, &labels(x, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{random_complex, random_subweighting, RandomParams};
    use crate::fixtures;
    use crate::ring::Valuation;
    use proptest::prelude::*;

    fn idx(x: &WeightedComplex, label: &str) -> usize {
        let s = x.find_label(label).unwrap();
        x.index_of(&s).unwrap()
    }

    #[test]
    fn kite_triangle_column() {
        let x = fixtures::kite();
        let d2 = weighted_boundary(&x, 2).unwrap();
        let c = idx(&x, "ABC");
        let val = |r: &str| d2.entry(idx(&x, r), c).valuation();
        assert_eq!(val("AB"), Valuation::Finite(1));
        assert_eq!(val("AC"), Valuation::Finite(3));
        assert_eq!(val("BC"), Valuation::Finite(2));
        assert_eq!(d2.column(c).len(), 3);
        // boundary of [a,b,c] is bc - ac + ab
        assert_eq!(d2.entry(idx(&x, "AC"), c).to_string(), "-pi^3");
        assert!(weighted_boundary(&x, 3).is_err());
        assert!(weighted_boundary(&x, 0).is_err());
    }

    #[test]
    fn constant_weight_is_classical() {
        let x = fixtures::kite().constant_weight(4);
        for n in 1..=2 {
            for (_, _, k, u) in weighted_boundary(&x, n).unwrap().split_units() {
                assert_eq!(k, 0);
                assert!(u.is_one() || (-u).is_one());
            }
        }
    }

    #[test]
    fn filled_triangle_entries_are_pi() {
        let x = fixtures::filled_triangle();
        let d2 = weighted_boundary(&x, 2).unwrap();
        assert_eq!(d2.nnz(), 3);
        assert!(d2.split_units().all(|(_, _, k, _)| k == 1));
    }

    #[test]
    fn kite_theta_from_unweighted() {
        let x = fixtures::kite();
        let ones = Weighting::constant(&x, 0);
        let t = theta(&x, &ones, &x.weighting(), 1).unwrap();
        let order = ["AB", "AC", "BC", "AD", "BD", "CD"];
        let expected = [3, 5, 4, 7, 8, 6];
        for (l, e) in order.iter().zip(expected) {
            let i = idx(&x, l);
            assert_eq!(t.entry(i, i).valuation(), Valuation::Finite(e));
        }
        assert_eq!(t.nnz(), 6);
        let same = theta(&x, &x.weighting(), &x.weighting(), 1).unwrap();
        assert_eq!(same, SparseMatrix::identity(x.field(), 6));
    }

    #[test]
    fn theta_rejects_ratio_outside_ring() {
        let x = fixtures::kite();
        let ab = x.find_label("AB").unwrap();
        let bad = Weighting::from_fn(&x, |s, w| if *s == ab { 5 } else { w });
        assert!(matches!(
            theta(&x, &bad, &x.weighting(), 1),
            Err(ChainError::RatioOutsideRing { source_weight: 5, target_weight: 3, .. })
        ));
    }

    #[test]
    fn fixtures_are_chain_complexes() {
        for (_, x) in fixtures::all() {
            assert!(check_chain_complex(&x));
            let ones = Weighting::constant(&x, 0);
            assert!(check_naturality(&x, &ones, &x.weighting()).unwrap());
            assert!(check_naturality(&x, &x.weighting(), &x.weighting()).unwrap());
        }
    }

    #[test]
    fn broken_naturality_is_detected() {
        // a "theta" whose exponent disagrees with the weights on one edge
        let x = fixtures::kite();
        let ones = Weighting::constant(&x, 0);
        let t1 = theta(&x, &ones, &x.weighting(), 1).unwrap();
        let t2 = theta(&x, &ones, &x.weighting(), 2).unwrap();
        let mut wrong = t1.clone();
        wrong.set(0, 0, LocalElement::signed_power(x.field(), false, 2));
        let d = boundary_matrix(&x.constant_weight(0), 2);
        assert_eq!(t1.mul(&d), boundary_matrix(&x, 2).mul(&t2));
        assert_ne!(wrong.mul(&d), boundary_matrix(&x, 2).mul(&t2));
    }

    #[test]
    fn dump_lists_every_entry() {
        let x = fixtures::kite();
        let text = dump_boundary(&x, 2);
        assert_eq!(text.lines().count(), 6);
        assert!(text.contains("AB ABC pi"));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn boundary_squares_to_zero(seed in any::<u64>()) {
            let x = random_complex(seed, RandomParams { max_dim: 3, per_dim: 15, max_weight: 10 });
            prop_assert!(check_chain_complex(&x));
            for n in 1..=x.dim().unwrap_or(0) {
                let d = boundary_matrix(&x, n);
                for (i, j, k, u) in d.split_units() {
                    let face = x.weights(n - 1)[i];
                    prop_assert_eq!(k, face - x.weights(n)[j]);
                    prop_assert!(u.is_one() || (-u).is_one());
                }
            }
        }

        #[test]
        fn naturality_and_composition(seed in any::<u64>()) {
            let x = random_complex(seed, RandomParams { max_dim: 3, per_dim: 10, max_weight: 10 });
            let mid = random_subweighting(&x, seed);
            let low = random_subweighting(&x.with_weighting(&mid).unwrap(), seed + 1);
            prop_assert!(check_naturality(&x, &mid, &x.weighting()).unwrap());
            let a = ChainMapPair::new(&x, &low, &mid).unwrap();
            let b = ChainMapPair::new(&x, &mid, &x.weighting()).unwrap();
            let direct = ChainMapPair::new(&x, &low, &x.weighting()).unwrap();
            prop_assert_eq!(a.then(&b), direct);
        }
    }
}
