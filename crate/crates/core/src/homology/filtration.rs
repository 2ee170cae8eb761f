use serde::{Deserialize, Serialize};

use super::{homology_direct, kappa_mu_split, quotient_homology, field_homology_rank, HomologyError, ModuleInvariants};
use crate::complex::{WeightedComplex, Weighting};

/// Weighted homology under `v_r`, which keeps the weights of simplices of
/// dimension at most `r` and sets the rest to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationStep {
    pub r: usize,
    /// Invariants of `H_n` for `n = 0..=dim`.
    pub invariants: Vec<ModuleInvariants>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationCheck {
    pub label: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    pub steps: Vec<FiltrationStep>,
    pub checks: Vec<FiltrationCheck>,
}

impl FiltrationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// The truncated weighting `v_r`.
pub fn truncated(x: &WeightedComplex, r: usize) -> WeightedComplex {
    let w = Weighting::from_fn(x, |s, w| if s.dim() <= r { w } else { 0 });
    x.with_weighting(&w).expect("truncation stays monotone")
}

/// Invariants along the weight filtration plus the rank identities it
/// implies: `rank H_n^(v_n) = dim H_n(X; F)`, `rank H_(n-1)^(v_n) =
/// rank H_(n-1)^(v_(n-1))`, and `H_n^(v_n)` modulo unweighted homology is
/// `(+) R/(pi^w(kappa))` over the kappa `n`-simplices.
pub fn weight_filtration_report(x: &WeightedComplex) -> Result<FiltrationReport, HomologyError> {
    let Some(top) = x.dim() else {
        return Ok(FiltrationReport { steps: Vec::new(), checks: Vec::new() });
    };
    let levels: Vec<WeightedComplex> = (0..=top).map(|r| truncated(x, r)).collect();
    let mut steps = Vec::new();
    for (r, xr) in levels.iter().enumerate() {
        let invariants = (0..=top).map(|n| homology_direct(xr, n)).collect::<Result<_, _>>()?;
        steps.push(FiltrationStep { r, invariants });
    }
    let mut checks = Vec::new();
    for n in 0..=top {
        let rank = steps[n].invariants[n].rank;
        let field_rank = field_homology_rank(x, n);
        checks.push(FiltrationCheck {
            label: format!("rank H_{n}^(v_{n}) = {rank} vs dim H_{n}(X;F) = {field_rank}"),
            holds: rank == field_rank,
        });
        if n > 0 {
            let (a, b) = (steps[n].invariants[n - 1].rank, steps[n - 1].invariants[n - 1].rank);
            checks.push(FiltrationCheck {
                label: format!("rank H_{}^(v_{n}) = {a} vs rank H_{}^(v_{}) = {b}", n - 1, n - 1, n - 1),
                holds: a == b,
            });
        }
        let split = kappa_mu_split(x, n, None)?;
        let expected = ModuleInvariants::new(0, split.kappa.iter().map(|&k| x.weights(n)[k]));
        let zero = Weighting::constant(x, 0);
        let got = quotient_homology(&levels[n], &zero, n)?;
        checks.push(FiltrationCheck {
            label: format!("H_{n}^(v_{n}) / H_{n}(X,R) = {got} vs kappa weights {expected}"),
            holds: got == expected,
        });
    }
    Ok(FiltrationReport { steps, checks })
}
