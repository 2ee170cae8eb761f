//! Bi-structures: two secondary structures on one backbone, their loops,
//! the weighted loop complex and its homology.

mod structure;

pub use structure::{Loop, Owner, SecondaryStructure};

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::WeightedComplex;
use crate::homology::{homology_direct, homology_structure, kappa_mu_split, HomologyError, ModuleInvariants};
use crate::ring::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiStructureError {
    #[error("illegal character '{1}' at position {0}")]
    IllegalCharacter(usize, char),
    #[error("unbalanced bracket at position {0}")]
    Unbalanced(usize),
    #[error("arc ({0}, {1}) is not inside the backbone")]
    BadArc(usize, usize),
    #[error("position {0} is paired twice")]
    SharedEndpoint(usize),
    #[error("arcs {0:?} and {1:?} cross within one structure")]
    Crossing((usize, usize), (usize, usize)),
    #[error("structures have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiStructure {
    pub s: SecondaryStructure,
    pub t: SecondaryStructure,
}

impl BiStructure {
    pub fn new(s: SecondaryStructure, t: SecondaryStructure) -> Result<Self, BiStructureError> {
        if s.length() != t.length() {
            return Err(BiStructureError::LengthMismatch(s.length(), t.length()));
        }
        Ok(BiStructure { s, t })
    }

    pub fn parse(s: &str, t: &str) -> Result<Self, BiStructureError> {
        Self::new(SecondaryStructure::parse(s)?, SecondaryStructure::parse(t)?)
    }

    /// All loops: those of S (exterior first), then those of T.
    pub fn loops(&self) -> Vec<Loop> {
        let mut v = self.s.loops(Owner::S);
        v.extend(self.t.loops(Owner::T));
        v
    }

    /// Seeded random bi-structure of length `length`.
    pub fn random(seed: u64, length: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = rng.gen_range(0.2..0.6);
        let s = SecondaryStructure::random(&mut rng, length, p);
        let t = SecondaryStructure::random(&mut rng, length, p);
        BiStructure { s, t }
    }
}

/// Weighted nerve of the loops: vertex `i` is loop `i`, a simplex is a set
/// of loops with a common position, weighted by the size of the common set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopNerve {
    pub loops: Vec<Loop>,
    pub complex: WeightedComplex,
}

/// Builds the nerve dimension by dimension, extending each simplex only by
/// loops of larger index.
pub fn loop_complex(b: &BiStructure) -> LoopNerve {
    let loops = b.loops();
    let sets: Vec<BTreeSet<usize>> = loops.iter().map(|l| l.vertices.iter().copied().collect()).collect();
    let mut level: Vec<(Vec<u32>, BTreeSet<usize>)> =
        sets.iter().enumerate().map(|(i, s)| (vec![i as u32], s.clone())).collect();
    let mut entries = Vec::new();
    while !level.is_empty() {
        let mut next = Vec::new();
        for (verts, common) in &level {
            entries.push((verts.clone(), common.len() as u32));
            let last = *verts.last().unwrap() as usize;
            for (k, s) in sets.iter().enumerate().skip(last + 1) {
                let inter: BTreeSet<usize> = common.intersection(s).copied().collect();
                if !inter.is_empty() {
                    let mut v = verts.clone();
                    v.push(k as u32);
                    next.push((v, inter));
                }
            }
        }
        level = next;
    }
    let names = loops.iter().map(Loop::name).collect();
    let complex = WeightedComplex::new(Field::Rational, entries, false)
        .expect("a nerve is closed and monotone")
        .with_names(Some(names));
    LoopNerve { loops, complex }
}

/// An arc of one of the two structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcRef {
    pub owner: Owner,
    pub arc: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingComponents {
    pub count: usize,
    /// Nontrivial classes, each sorted, in order of their smallest arc.
    pub components: Vec<Vec<ArcRef>>,
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = if a <= b { (a, b) } else { (b, a) };
    i < k && k < j && j < l
}

/// Classes of the transitive closure of arc crossing with at least two arcs.
/// Exterior rainbows do not take part.
pub fn crossing_components(b: &BiStructure) -> CrossingComponents {
    let arcs: Vec<ArcRef> = b
        .s
        .arcs()
        .iter()
        .map(|&arc| ArcRef { owner: Owner::S, arc })
        .chain(b.t.arcs().iter().map(|&arc| ArcRef { owner: Owner::T, arc }))
        .collect();
    let mut parent: Vec<usize> = (0..arcs.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut i = i;
        while p[i] != r {
            let next = p[i];
            p[i] = r;
            i = next;
        }
        r
    }
    for a in 0..arcs.len() {
        for c in a + 1..arcs.len() {
            if crosses(arcs[a].arc, arcs[c].arc) {
                let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
                parent[ra.max(rc)] = ra.min(rc);
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<ArcRef>> = Default::default();
    for i in 0..arcs.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(arcs[i]);
    }
    let mut components: Vec<Vec<ArcRef>> = classes
        .into_values()
        .filter(|c| c.len() > 1)
        .map(|mut c| {
            c.sort_by_key(|a| (a.arc, a.owner));
            c
        })
        .collect();
    components.sort_by_key(|c| c[0].arc);
    CrossingComponents { count: components.len(), components }
}

/// No simplices above dimension 2 and every 2-simplex has weight 1.
pub fn is_lean(x: &WeightedComplex) -> bool {
    x.dim().is_none_or(|d| d <= 2) && x.weights(2).iter().all(|&w| w == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub n: usize,
    pub computed: ModuleInvariants,
    /// Closed-form prediction; absent when the complex is not lean.
    pub predicted: Option<ModuleInvariants>,
}

impl DegreeCheck {
    pub fn matches(&self) -> Option<bool> {
        self.predicted.as_ref().map(|p| *p == self.computed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeanHomologyReport {
    pub lean: bool,
    pub crossing_components: usize,
    pub degrees: Vec<DegreeCheck>,
}

impl LeanHomologyReport {
    /// `Some(true)` when lean and all three degrees match.
    pub fn all_match(&self) -> Option<bool> {
        self.lean.then(|| self.degrees.iter().all(|d| d.matches() == Some(true)))
    }
}

fn homology_or_zero(x: &WeightedComplex, n: usize) -> Result<ModuleInvariants, HomologyError> {
    if x.dim().is_none_or(|d| n > d) {
        Ok(ModuleInvariants::zero())
    } else {
        homology_direct(x, n)
    }
}

/// Compares the computed homology of a lean loop complex with the closed
/// forms `H_2 = R^C`, `H_1 = (+) R/(pi^(w(kappa) - 1))` over kappa edges, and
/// `H_0 = R (+) R/(pi^(w(v) - w(mu)))` over the degree-0 pairing.
pub fn verify_lean_homology(b: &BiStructure) -> Result<LeanHomologyReport, HomologyError> {
    let x = loop_complex(b).complex;
    let lean = is_lean(&x);
    let c = crossing_components(b).count;
    let mut degrees = Vec::new();
    for n in 0..=2 {
        let computed = homology_or_zero(&x, n)?;
        let predicted = if !lean {
            None
        } else {
            Some(match n {
                2 => ModuleInvariants::new(c, []),
                1 if x.count(1) == 0 => ModuleInvariants::zero(),
                1 => {
                    let split = kappa_mu_split(&x, 1, None)?;
                    ModuleInvariants::new(0, split.kappa.iter().map(|&k| x.weights(1)[k] - 1))
                }
                _ => {
                    let (_, pairing) = homology_structure(&x, 0)?;
                    let w0 = x.weights(0);
                    let w1 = x.weights(1);
                    ModuleInvariants::new(1, pairing.pairs.iter().map(|p| w0[p.kappa] - w1[p.mu]))
                }
            })
        };
        degrees.push(DegreeCheck { n, computed, predicted });
    }
    Ok(LeanHomologyReport { lean, crossing_components: c, degrees })
}
