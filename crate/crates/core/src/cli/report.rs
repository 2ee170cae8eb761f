//! Text and JSON renderings for each verb.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{CliError, Outcome};
use crate::bistructure::{crossing_components, loop_complex, verify_lean_homology, BiStructure, CrossingComponents, DegreeCheck};
use crate::chain::{check_chain_complex, check_naturality};
use crate::complex::{WeightedComplex, Weighting};
use crate::homology::{
    homology_direct, homology_structure, k_basis, kappa_mu_split, quotient_homology, random_order, render_invariants,
    render_pairing, theta_injectivity, weight_filtration_report, HomologyReport, ModuleInvariants, PairingRow,
    ThetaVerdict,
};
use crate::oracle::{differential_run_with, oracle_checks, CheckOutcome, OracleReport, OracleSummary, RunOptions};
use crate::ring::LocalElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDoc {
    pub field: String,
    pub degrees: Vec<HomologyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<CheckOutcome>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDoc {
    pub kappa: String,
    /// `(simplex, coefficient)` pairs, kappa itself first.
    pub terms: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub n: usize,
    pub kappa: Vec<String>,
    pub mu: Vec<String>,
    pub cycles: Vec<CycleDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingDoc {
    pub n: usize,
    pub rows: Vec<PairingRow>,
    pub free: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDoc {
    pub n: usize,
    pub source: u32,
    pub invariants: ModuleInvariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaDoc {
    pub n: usize,
    pub injective: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopRow {
    pub name: String,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BistructDoc {
    pub s: String,
    pub t: String,
    pub loops: Vec<LoopRow>,
    /// Simplex count per dimension of the loop complex.
    pub counts: Vec<usize>,
    pub crossing: CrossingComponents,
    pub lean: bool,
    pub degrees: Vec<DegreeCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<CheckOutcome>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub counts: Vec<usize>,
    pub chain_complex: bool,
    pub naturality: bool,
    pub filtration: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<CheckOutcome>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteDoc {
    pub summary: OracleSummary,
    pub reports: Vec<OracleReport>,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn header(out: &mut String, dims: &[usize], n: usize) {
    if dims.len() > 1 {
        let _ = writeln!(out, "# n = {n}");
    }
}

fn counts(x: &WeightedComplex) -> Vec<usize> {
    (0..=x.dim().map_or(0, |d| d + 1)).map(|n| x.count(n)).take_while(|&c| c > 0).collect()
}

/// `pi^2*BD` style term; the sign is handled by the caller.
fn term(coeff: &LocalElement, label: &str) -> (bool, String) {
    let s = coeff.to_string();
    let (negative, mag) = match s.strip_prefix('-') {
        Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
        _ if s.contains(' ') => (false, format!("({s})")),
        _ => (false, s),
    };
    if mag == "1" {
        (negative, label.to_string())
    } else {
        (negative, format!("{mag}*{label}"))
    }
}

fn render_chain(terms: &[(String, LocalElement)]) -> String {
    let mut out = String::new();
    for (i, (label, c)) in terms.iter().enumerate() {
        let (negative, body) = term(c, label);
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn oracle_text(out: &mut String, checks: &[CheckOutcome]) -> bool {
    let bad: Vec<&CheckOutcome> = checks.iter().filter(|c| !c.agrees()).collect();
    if bad.is_empty() {
        let _ = writeln!(out, "oracle: {} checks agree", checks.len());
    } else {
        let _ = writeln!(out, "oracle: {} of {} checks disagree", bad.len(), checks.len());
        for c in bad {
            let _ = writeln!(out, "  {}: engine {} oracle {}", c.name, c.engine, c.oracle);
        }
    }
    checks.iter().all(CheckOutcome::agrees)
}

pub(super) fn homology(x: &WeightedComplex, dims: &[usize], oracle: bool) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut degrees = Vec::new();
    for &n in dims {
        let inv = homology_direct(x, n)?;
        let _ = writeln!(text, "{}", render_invariants(n, &inv));
        degrees.push(HomologyReport { n, invariants: inv, pairing: None, free_kappas: None });
    }
    let checks = oracle.then(|| oracle_checks(x));
    let ok = checks.as_deref().is_none_or(|c| oracle_text(&mut text, c));
    let doc = HomologyDoc { field: x.field().tag(), degrees, oracle: checks };
    Ok(Outcome { text, json: json(&doc), ok })
}

pub(super) fn basis(x: &WeightedComplex, dims: &[usize], order: Option<u64>) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut docs = Vec::new();
    for &n in dims {
        let perm = order.map(|seed| random_order(x.count(n), seed));
        let split = kappa_mu_split(x, n, perm.as_deref())?;
        let label = |i: usize| x.label(&x.simplices(n)[i]);
        let kappa: Vec<String> = split.kappa.iter().map(|&i| label(i)).collect();
        let mu: Vec<String> = split.mu.iter().map(|&i| label(i)).collect();
        header(&mut text, dims, n);
        let _ = writeln!(text, "kappa: {{{}}}", kappa.join(", "));
        let _ = writeln!(text, "mu: {{{}}}", mu.join(", "));
        let mut cycles = Vec::new();
        for b in k_basis(x, &split) {
            let mut terms = vec![(label(b.kappa), LocalElement::one(x.field()))];
            terms.extend(b.coefficients.iter().map(|(j, c)| (label(*j), c.clone())));
            let _ = writeln!(text, "beta({}) = {}", label(b.kappa), render_chain(&terms));
            cycles.push(CycleDoc {
                kappa: label(b.kappa),
                terms: terms.iter().map(|(l, c)| (l.clone(), c.to_string())).collect(),
            });
        }
        docs.push(BasisDoc { n, kappa, mu, cycles });
    }
    Ok(Outcome { text, json: json(&docs), ok: true })
}

pub(super) fn pairing(x: &WeightedComplex, dims: &[usize]) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut docs = Vec::new();
    for &n in dims {
        let (_, p) = homology_structure(x, n)?;
        header(&mut text, dims, n);
        text.push_str(&render_pairing(x, &p));
        docs.push(PairingDoc { n, rows: p.labeled(x), free: p.free_labels(x) });
    }
    Ok(Outcome { text, json: json(&docs), ok: true })
}

pub(super) fn quotient(x: &WeightedComplex, dims: &[usize], source: u32) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut docs = Vec::new();
    let w = Weighting::constant(x, source);
    for &n in dims {
        let inv = quotient_homology(x, &w, n)?;
        let _ = writeln!(text, "H_{n}^v(X/theta) = {inv}");
        docs.push(QuotientDoc { n, source, invariants: inv });
    }
    Ok(Outcome { text, json: json(&docs), ok: true })
}

fn integer_terms(x: &WeightedComplex, n: usize, v: &[num_bigint::BigInt]) -> Vec<(String, LocalElement)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
        .map(|(i, c)| (x.label(&x.simplices(n)[i]), LocalElement::from_scalar(x.field().from_bigint(c))))
        .collect()
}

pub(super) fn theta(x: &WeightedComplex, dims: &[usize]) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut docs = Vec::new();
    for &n in dims {
        match theta_injectivity(x, n)? {
            ThetaVerdict::Injective => {
                let _ = writeln!(text, "theta_{n}: injective");
                docs.push(ThetaDoc { n, injective: true, order: None, cycle: None, chain: None });
            }
            ThetaVerdict::NotInjective { cycle, order, chain, .. } => {
                let c = integer_terms(x, n, &cycle);
                let h = integer_terms(x, n + 1, &chain);
                let _ = writeln!(text, "theta_{n}: not injective, class of order {order}");
                let _ = writeln!(text, "  cycle: {}", render_chain(&c));
                let _ = writeln!(text, "  {order} * cycle = d({})", render_chain(&h));
                let pairs = |t: Vec<(String, LocalElement)>| t.into_iter().map(|(l, c)| (l, c.to_string())).collect();
                docs.push(ThetaDoc {
                    n,
                    injective: false,
                    order: Some(order.to_string()),
                    cycle: Some(pairs(c)),
                    chain: Some(pairs(h)),
                });
            }
        }
    }
    Ok(Outcome { text, json: json(&docs), ok: true })
}

pub(super) fn bistruct(s: &str, t: &str, oracle: bool) -> Result<Outcome, CliError> {
    let b = BiStructure::parse(s, t)?;
    let nerve = loop_complex(&b);
    let x = &nerve.complex;
    let crossing = crossing_components(&b);
    let report = verify_lean_homology(&b)?;
    let loops: Vec<LoopRow> =
        nerve.loops.iter().map(|l| LoopRow { name: l.name(), vertices: l.vertices.clone() }).collect();

    let mut text = format!("S {}\nT {}\n", b.s, b.t);
    let width = loops.iter().map(|l| l.name.len()).max().unwrap_or(4).max(4);
    let _ = writeln!(text, "{:<width$}  vertices", "loop");
    for l in &loops {
        let v: Vec<String> = l.vertices.iter().map(usize::to_string).collect();
        let _ = writeln!(text, "{:<width$}  {{{}}}", l.name, v.join(","));
    }
    let c = counts(x);
    let _ = writeln!(text, "simplices per dimension: {c:?}");
    let _ = writeln!(text, "crossing components: {}", crossing.count);
    let _ = writeln!(text, "lean: {}", report.lean);
    for d in &report.degrees {
        let line = render_invariants(d.n, &d.computed);
        match (&d.predicted, d.matches()) {
            (Some(p), Some(true)) => {
                let _ = writeln!(text, "{line}  [closed form {p}: match]");
            }
            (Some(p), _) => {
                let _ = writeln!(text, "{line}  [closed form {p}: MISMATCH]");
            }
            (None, _) => {
                let _ = writeln!(text, "{line}");
            }
        }
    }
    let checks = oracle.then(|| oracle_checks(x));
    let oracle_ok = checks.as_deref().is_none_or(|ch| oracle_text(&mut text, ch));
    let ok = oracle_ok && report.all_match() != Some(false);
    let doc = BistructDoc {
        s: b.s.to_string(),
        t: b.t.to_string(),
        loops,
        counts: c,
        crossing,
        lean: report.lean,
        degrees: report.degrees,
        oracle: checks,
    };
    Ok(Outcome { text, json: json(&doc), ok })
}

pub(super) fn check(x: &WeightedComplex, oracle: bool) -> Result<Outcome, CliError> {
    let chain_complex = check_chain_complex(x);
    let naturality = check_naturality(x, &Weighting::constant(x, 0), &x.weighting()).unwrap_or(false);
    let filtration = x.is_empty() || weight_filtration_report(x)?.all_hold();
    let mut text = String::new();
    let c = counts(x);
    let _ = writeln!(text, "valid complex over {}, simplices per dimension: {c:?}", x.field());
    let flag = |b: bool| if b { "ok" } else { "FAILED" };
    let _ = writeln!(text, "boundary squares to zero: {}", flag(chain_complex));
    let _ = writeln!(text, "theta naturality from zero weights: {}", flag(naturality));
    let _ = writeln!(text, "weight filtration identities: {}", flag(filtration));
    let checks = oracle.then(|| oracle_checks(x));
    let oracle_ok = checks.as_deref().is_none_or(|ch| oracle_text(&mut text, ch));
    let doc = CheckDoc { counts: c, chain_complex, naturality, filtration, oracle: checks };
    Ok(Outcome { text, json: json(&doc), ok: chain_complex && naturality && filtration && oracle_ok })
}

pub(super) fn suite(seed: u64, cases: usize) -> Outcome {
    let (reports, summary) = differential_run_with(seed, cases, &RunOptions::default());
    let mut text: String = reports.iter().map(OracleReport::to_text).collect();
    let _ = writeln!(
        text,
        "{} cases, {} checks, {} mismatches ({} minor checks over the size bound)",
        summary.cases, summary.checks, summary.mismatched_checks, summary.skipped_minor_checks
    );
    let ok = summary.all_match();
    Outcome { text, json: json(&SuiteDoc { summary, reports }), ok }
}
