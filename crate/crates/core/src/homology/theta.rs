use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{check_dim, HomologyError};
use crate::chain::{boundary_matrix, integer_boundary};
use crate::complex::WeightedComplex;
use crate::linalg::{integer_snf, solve_membership};
use crate::ring::{Field, LocalElement};

/// Outcome of the injectivity test for the map from integral homology into
/// weighted homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThetaVerdict {
    Injective,
    /// `cycle` is an integer cycle that is not a boundary, with
    /// `order * cycle = d(chain)`. Its theta image is the weighted boundary
    /// of `preimage`, so its class dies.
    NotInjective {
        cycle: Vec<BigInt>,
        order: BigInt,
        chain: Vec<BigInt>,
        #[serde(skip)]
        preimage: Vec<LocalElement>,
    },
}

impl ThetaVerdict {
    pub fn is_injective(&self) -> bool {
        matches!(self, ThetaVerdict::Injective)
    }
}

/// Decides injectivity from integer torsion in degree `n` and, when there is
/// torsion, builds and verifies a witness cycle.
pub fn theta_injectivity(x: &WeightedComplex, n: usize) -> Result<ThetaVerdict, HomologyError> {
    if x.field() != Field::Rational {
        return Err(HomologyError::WrongField(x.field()));
    }
    check_dim(x, n)?;
    let d = integer_boundary(x, n + 1);
    let snf = integer_snf(&d, x.count(n + 1));
    let Some(i) = snf.diagonal.iter().position(|v| !v.is_one()) else {
        return Ok(ThetaVerdict::Injective);
    };
    let order = snf.diagonal[i].clone();
    let cycle: Vec<BigInt> = snf.left_inverse.iter().map(|row| row[i].clone()).collect();
    let chain: Vec<BigInt> = snf.right.iter().map(|row| row[i].clone()).collect();
    let field = x.field();
    let weighted = |v: &BigInt, w: u32| {
        LocalElement::from_scalar(field.from_bigint(v)) * LocalElement::signed_power(field, false, w)
    };
    let image: Vec<LocalElement> = cycle
        .iter()
        .zip(x.weights(n))
        .map(|(c, &w)| weighted(c, w))
        .collect();
    let preimage = solve_membership(&boundary_matrix(x, n + 1), &image)
        .map_err(|e| HomologyError::WitnessFailed(e.to_string()))?;
    // integral checks: d(chain) = order * cycle, and d(cycle) = 0
    for (row, c) in d.iter().zip(&cycle) {
        let lhs: BigInt = row.iter().zip(&chain).map(|(a, b)| a * b).sum();
        if lhs != &order * c {
            return Err(HomologyError::WitnessFailed("chain does not bound order * cycle".into()));
        }
    }
    let dn = integer_boundary(x, n);
    if dn.iter().any(|row| row.iter().zip(&cycle).map(|(a, b)| a * b).sum::<BigInt>() != BigInt::from(0)) {
        return Err(HomologyError::WitnessFailed("witness is not a cycle".into()));
    }
    Ok(ThetaVerdict::NotInjective {
        cycle,
        order,
        chain,
        preimage,
    })
}
