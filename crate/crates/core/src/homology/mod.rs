//! Weighted homology: the kappa/mu split and its cycle basis, homology by
//! direct presentation and by the structure theorem with its torsion
//! pairing, quotient homology, theta injectivity and the weight filtration.

mod compute;
mod filtration;
mod quotient;
mod report;
mod split;
mod theta;

pub(crate) use compute::boundaries_in_basis;
pub use compute::{field_homology_rank, homology_direct, homology_structure};
pub use filtration::{truncated, weight_filtration_report, FiltrationCheck, FiltrationReport, FiltrationStep};
pub use quotient::{quotient_homology, theta_cokernel};
pub use report::{render_invariants, render_pairing, HomologyReport};
pub use split::{k_basis, kappa_mu_split, kappa_mu_split_reference, random_order};
pub use theta::{theta_injectivity, ThetaVerdict};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chain::ChainError;
use crate::complex::WeightedComplex;
use crate::ring::{Field, LocalElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("dimension {n} out of range ({})", match top { Some(d) => format!("top dimension is {d}"), None => "complex is empty".to_string() })]
    DimensionOutOfRange { n: usize, top: Option<usize> },
    #[error("processing order is not a permutation of 0..{0}")]
    BadOrder(usize),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("could not build a torsion pairing: {0}")]
    PairingFailed(String),
    #[error("theta injectivity needs rational coefficients, got {0}")]
    WrongField(Field),
    #[error("witness cycle failed verification: {0}")]
    WitnessFailed(String),
}

/// `R^rank (+) R/(pi^d1) (+) ...`; torsion exponents ascending and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleInvariants {
    pub rank: usize,
    pub torsion: Vec<u32>,
}

impl ModuleInvariants {
    /// Drops zero exponents and sorts the rest.
    pub fn new(rank: usize, exponents: impl IntoIterator<Item = u32>) -> Self {
        let mut torsion: Vec<u32> = exponents.into_iter().filter(|&e| e > 0).collect();
        torsion.sort_unstable();
        ModuleInvariants { rank, torsion }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for ModuleInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(format!("R^{}", self.rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("R/(pi^{d})")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" (+) "))
        }
    }
}

/// Bipartition of the `n`-simplices (by index) into kappa and mu sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMuSplit {
    pub n: usize,
    /// Ascending simplex indices.
    pub kappa: Vec<usize>,
    /// Ascending simplex indices.
    pub mu: Vec<usize>,
}

/// The cycle `kappa + sum r_mu mu` attached to one kappa-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCycle {
    pub kappa: usize,
    /// Nonzero coefficients on mu-simplices, by ascending index.
    pub coefficients: Vec<(usize, LocalElement)>,
}

impl BasisCycle {
    /// Dense coefficient vector over all `n`-simplices.
    pub fn to_vector(&self, field: Field, len: usize) -> Vec<LocalElement> {
        let mut v = vec![LocalElement::zero(field); len];
        v[self.kappa] = LocalElement::one(field);
        for (j, c) in &self.coefficients {
            v[*j] = c.clone();
        }
        v
    }

    /// The unweighted cycle `beta` with `theta(beta) = v(kappa) * self`:
    /// coefficient `pi^(w(kappa) - w(s)) r_s` at each simplex `s`.
    pub fn unweighted(&self, x: &WeightedComplex, n: usize) -> Vec<LocalElement> {
        let field = x.field();
        let wk = x.weights(n)[self.kappa];
        let mut v = vec![LocalElement::zero(field); x.count(n)];
        v[self.kappa] = LocalElement::one(field);
        for (j, c) in &self.coefficients {
            let ws = x.weights(n)[*j];
            let scaled = c * &LocalElement::signed_power(field, false, wk);
            v[*j] = scaled
                .divide_exact(&LocalElement::signed_power(field, false, ws))
                .expect("monomial degree law");
        }
        v
    }
}

/// One `(kappa, mu, exponent)` row of a pairing, by simplex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairEntry {
    /// Index among the `n`-simplices.
    pub kappa: usize,
    /// Index among the `(n+1)`-simplices.
    pub mu: usize,
    pub exponent: u32,
}

/// Torsion pairing between kappa `n`-simplices and mu `(n+1)`-simplices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TorsionPairing {
    pub n: usize,
    pub pairs: Vec<PairEntry>,
    pub free_kappas: Vec<usize>,
}

/// Serializable, labelled pairing row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingRow {
    pub kappa: String,
    pub mu: String,
    pub exponent: u32,
}

impl TorsionPairing {
    /// Rows with simplex labels, sorted by `(kappa, mu)` label.
    pub fn labeled(&self, x: &WeightedComplex) -> Vec<PairingRow> {
        let mut rows: Vec<PairingRow> = self
            .pairs
            .iter()
            .map(|p| PairingRow {
                kappa: x.label(&x.simplices(self.n)[p.kappa]),
                mu: x.label(&x.simplices(self.n + 1)[p.mu]),
                exponent: p.exponent,
            })
            .collect();
        rows.sort_by(|a, b| (&a.kappa, &a.mu).cmp(&(&b.kappa, &b.mu)));
        rows
    }

    pub fn free_labels(&self, x: &WeightedComplex) -> Vec<String> {
        self.free_kappas.iter().map(|&k| x.label(&x.simplices(self.n)[k])).collect()
    }

    /// Positive exponents as module invariants with the given rank.
    pub fn invariants(&self, rank: usize) -> ModuleInvariants {
        ModuleInvariants::new(rank, self.pairs.iter().map(|p| p.exponent))
    }
}

pub(crate) fn check_dim(x: &WeightedComplex, n: usize) -> Result<(), HomologyError> {
    match x.dim() {
        Some(d) if n <= d => Ok(()),
        top => Err(HomologyError::DimensionOutOfRange { n, top }),
    }
}

#[cfg(test)]
mod tests;
