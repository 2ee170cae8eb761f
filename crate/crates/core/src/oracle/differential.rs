use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{integer_homology, minor_valuation_invariants_bounded, DEFAULT_MINOR_BOUND};
use crate::chain::{check_chain_complex, check_naturality, integer_boundary};
use crate::complex::{random_complex, random_subweighting, RandomParams, WeightedComplex, Weighting};
use crate::homology::{
    boundaries_in_basis,     field_homology_rank, homology_direct, homology_structure, kappa_mu_split, quotient_homology, ModuleInvariants,
};
use crate::linalg::{integer_snf, smith_normal_form};
use crate::ring::Field;

/// Shape of the generated complexes.
pub const SUITE_PARAMS: RandomParams = RandomParams { max_dim: 3, per_dim: 15, max_weight: 10 };

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

/// One comparison inside a case: the engine's answer next to the oracle's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub engine: String,
    pub oracle: String,
}

impl CheckOutcome {
    pub fn agrees(&self) -> bool {
        self.engine == self.oracle
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub case: usize,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
    pub verdict: Verdict,
}

impl OracleReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.agrees())
    }

    /// `case 0003 seed 8841... match (31 checks)` plus one indented line per
    /// disagreement.
    pub fn to_text(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Match => "match",
            Verdict::Mismatch => "MISMATCH",
        };
        let mut s = format!("case {:04} seed {} {} ({} checks)\n", self.case, self.seed, verdict, self.checks.len());
        for c in self.mismatches() {
            s.push_str(&format!("  {}: engine {} oracle {}\n", c.name, c.engine, c.oracle));
        }
        s
    }
}

/// Machine-readable digest of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub seed: u64,
    pub cases: usize,
    pub checks: usize,
    pub mismatched_checks: usize,
    pub failing_cases: Vec<usize>,
    /// Minor-oracle comparisons skipped because the matrix exceeded the bound.
    pub skipped_minor_checks: usize,
}

impl OracleSummary {
    pub fn all_match(&self) -> bool {
        self.failing_cases.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub params: RandomParams,
    pub minor_bound: usize,
    /// Case whose engine side sees a perturbed complex: every vertex weight
    /// raised by one after generation. Harness self-test.
    pub fault: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { params: SUITE_PARAMS, minor_bound: DEFAULT_MINOR_BOUND, fault: None }
    }
}

/// Seeded differential run with default options.
pub fn differential_run(seed: u64, cases: usize) -> Vec<OracleReport> {
    differential_run_with(seed, cases, &RunOptions::default()).0
}

/// Seeded differential run; returns per-case reports (ordered by case id)
/// and the summary.
pub fn differential_run_with(seed: u64, cases: usize, opts: &RunOptions) -> (Vec<OracleReport>, OracleSummary) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..cases).map(|_| rng.gen()).collect();
    let mut skipped = 0;
    let reports: Vec<OracleReport> = seeds
        .iter()
        .enumerate()
        .map(|(case, &s)| {
            let (report, sk) = run_case(case, s, opts);
            skipped += sk;
            report
        })
        .collect();
    let summary = OracleSummary {
        seed,
        cases,
        checks: reports.iter().map(|r| r.checks.len()).sum(),
        mismatched_checks: reports.iter().map(|r| r.mismatches().count()).sum(),
        failing_cases: reports.iter().filter(|r| r.verdict == Verdict::Mismatch).map(|r| r.case).collect(),
        skipped_minor_checks: skipped,
    };
    (reports, summary)
}

fn perturbed(x: &WeightedComplex) -> WeightedComplex {
    let w = Weighting::from_fn(x, |s, w| if s.dim() == 0 { w + 1 } else { w });
    x.with_weighting(&w).expect("raising vertex weights keeps monotonicity")
}

fn render<T: Display, E: Display>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

struct Case {
    checks: Vec<CheckOutcome>,
}

impl Case {
    fn push(&mut self, name: impl Into<String>, engine: impl Into<String>, oracle: impl Into<String>) {
        self.checks.push(CheckOutcome { name: name.into(), engine: engine.into(), oracle: oracle.into() });
    }
}

fn run_case(case: usize, seed: u64, opts: &RunOptions) -> (OracleReport, usize) {
    let x = random_complex(seed, opts.params);
    let ex = if opts.fault == Some(case) { perturbed(&x) } else { x.clone() };
    let (checks, skipped) = compare(&x, &ex, seed, opts.minor_bound);
    let verdict = if checks.iter().all(CheckOutcome::agrees) { Verdict::Match } else { Verdict::Mismatch };
    (OracleReport { case, seed, checks, verdict }, skipped)
}

/// Every engine/oracle comparison on one complex. Matrices beyond the
/// minor bound are left out.
pub fn oracle_checks(x: &WeightedComplex) -> Vec<CheckOutcome> {
    compare(x, x, 0, DEFAULT_MINOR_BOUND).0
}

/// Engine answers come from `ex`, oracle answers from `x`; they differ only
/// under fault injection.
fn compare(x: &WeightedComplex, ex: &WeightedComplex, seed: u64, minor_bound: usize) -> (Vec<CheckOutcome>, usize) {
    let mut c = Case { checks: Vec::new() };
    let mut skipped = 0;

    c.push("chain", check_chain_complex(ex).to_string(), "true");
    let sub = random_subweighting(x, seed ^ 0x5eed);
    c.push("naturality", render(check_naturality(ex, &sub, &ex.weighting())), "true");

    let f2 = Field::Prime(2);
    let (x2, ex2) = (x.with_field(f2), ex.with_field(f2));
    for n in 0..=x.dim().unwrap_or(0) {
        if x.count(n) == 0 {
            continue;
        }
        let direct = homology_direct(x, n);
        c.push(
            format!("structure/{n}"),
            render(homology_structure(ex, n).map(|(inv, _)| inv)),
            render(direct.clone()),
        );
        c.push(
            format!("rank-q/{n}"),
            render(homology_direct(ex, n).map(|h| h.rank)),
            field_homology_rank(x, n).to_string(),
        );
        c.push(
            format!("rank-f2/{n}"),
            render(homology_direct(&ex2, n).map(|h| h.rank)),
            field_homology_rank(&x2, n).to_string(),
        );

        if let (Ok((_, eb)), Ok((_, ob))) = (boundaries_in_basis(ex, n), boundaries_in_basis(x, n)) {
            match minor_valuation_invariants_bounded(&ob, minor_bound) {
                Ok(minors) => c.push(
                    format!("minors/{n}"),
                    format!("{:?}", smith_normal_form(&eb).exponents),
                    format!("{minors:?}"),
                ),
                Err(_) => skipped += 1,
            }
        }

        let (esk, osk) = (ex.skeleton(n), x.skeleton(n));
        let expected = kappa_mu_split(&osk, n, None)
            .map(|s| ModuleInvariants::new(0, s.kappa.iter().map(|&k| osk.weights(n)[k])));
        c.push(
            format!("skeleton-quotient/{n}"),
            render(quotient_homology(&esk, &Weighting::constant(&esk, 0), n)),
            render(expected),
        );

        let oracle = integer_homology(x, n);
        let next = if n < x.dim().unwrap_or(0) { x.count(n + 1) } else { 0 };
        let next_m = if next > 0 { integer_boundary(ex, n + 1) } else { vec![Vec::new(); ex.count(n)] };
        let snf = integer_snf(&next_m, next);
        let prev_rank = integer_snf(&integer_boundary(ex, n), ex.count(n)).rank();
        c.push(
            format!("integer/{n}"),
            format!("{} {:?}", ex.count(n) - prev_rank - snf.rank(), snf.torsion()),
            format!("{} {:?}", oracle.rank, oracle.torsion),
        );
    }
    (c.checks, skipped)
}
