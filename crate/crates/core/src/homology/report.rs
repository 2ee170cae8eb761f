use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{ModuleInvariants, PairingRow, TorsionPairing};
use crate::complex::WeightedComplex;

/// `H_n^v = R^1 (+) R/(pi^1) (+) R/(pi^4)`.
pub fn render_invariants(n: usize, inv: &ModuleInvariants) -> String {
    format!("H_{n}^v = {inv}")
}

/// Pairing table, one `(kappa, mu, exponent)` row per pair, then the free
/// kappa-simplices.
pub fn render_pairing(x: &WeightedComplex, pairing: &TorsionPairing) -> String {
    let mut out = String::from("(kappa, mu, exponent)\n");
    for row in pairing.labeled(x) {
        let _ = writeln!(out, "({}, {}, {})", row.kappa, row.mu, row.exponent);
    }
    let _ = writeln!(out, "free: {{{}}}", pairing.free_labels(x).join(", "));
    out
}

/// Machine-readable homology of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub n: usize,
    pub invariants: ModuleInvariants,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<PairingRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_kappas: Option<Vec<String>>,
}

impl HomologyReport {
    pub fn with_pairing(x: &WeightedComplex, n: usize, inv: ModuleInvariants, pairing: &TorsionPairing) -> Self {
        HomologyReport {
            n,
            invariants: inv,
            pairing: Some(pairing.labeled(x)),
            free_kappas: Some(pairing.free_labels(x)),
        }
    }
}
