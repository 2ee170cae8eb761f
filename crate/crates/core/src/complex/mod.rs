//! Weighted simplicial complexes: a finite simplicial complex with a
//! non-negative integer weight per simplex that never increases from a face
//! to a coface.

mod document;
mod random;

pub use document::{load_complex, ComplexDocument, SimplexEntry};
pub use random::{random_complex, random_subweighting, RandomParams};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{Field, RingError};

/// A simplex as a strictly increasing list of vertex ids.
///
/// The `i`-th face omits the `i`-th vertex and carries sign `(-1)^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    pub fn new(vertices: Vec<u32>) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::EmptySimplex);
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ComplexError::NotAscending(vertices));
        }
        Ok(Simplex(vertices))
    }

    /// Sorts and deduplicates before constructing.
    pub fn from_unsorted(mut vertices: Vec<u32>) -> Result<Self, ComplexError> {
        vertices.sort_unstable();
        vertices.dedup();
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces with their orientation signs, in order of the
    /// omitted vertex. Empty for vertices.
    pub fn faces(&self) -> impl Iterator<Item = (bool, Simplex)> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            (i % 2 == 1, Simplex(v))
        })
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A validation problem found in a complex. Violations are data, not failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    MissingFace { simplex: Simplex, face: Simplex },
    NonMonotone {
        face: Simplex,
        face_weight: u32,
        coface: Simplex,
        coface_weight: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingFace { simplex, face } => {
                write!(f, "face {face} of {simplex} is missing")
            }
            Violation::NonMonotone {
                face,
                face_weight,
                coface,
                coface_weight,
            } => write!(
                f,
                "weight of {face} ({face_weight}) is below weight of its coface {coface} ({coface_weight})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("simplex with no vertices")]
    EmptySimplex,
    #[error("vertex list {0:?} is not strictly ascending")]
    NotAscending(Vec<u32>),
    #[error("simplex {0} listed twice")]
    Duplicate(Simplex),
    #[error("invalid complex: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("weighting does not match the complex shape")]
    ShapeMismatch,
    #[error("document parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Per-dimension weight values aligned with a complex's simplex lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weighting(Vec<Vec<u32>>);

impl Weighting {
    pub fn constant(x: &WeightedComplex, c: u32) -> Self {
        Weighting(x.simplices.iter().map(|s| vec![c; s.len()]).collect())
    }

    pub fn from_fn(x: &WeightedComplex, mut f: impl FnMut(&Simplex, u32) -> u32) -> Self {
        Weighting(
            x.simplices
                .iter()
                .zip(&x.weights)
                .map(|(ss, ws)| ss.iter().zip(ws).map(|(s, &w)| f(s, w)).collect())
                .collect(),
        )
    }

    pub fn get(&self, n: usize, i: usize) -> u32 {
        self.0[n][i]
    }

    pub fn dim_values(&self, n: usize) -> &[u32] {
        self.0.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    fn shape(&self) -> Vec<usize> {
        self.0.iter().map(Vec::len).collect()
    }
}

/// A validated (or, via [`WeightedComplex::from_parts_unchecked`], raw)
/// weighted simplicial complex.
///
/// Simplices are stored per dimension; within a dimension the order is
/// lexicographic on vertex lists unless built from explicit parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedComplex {
    field: Field,
    simplices: Vec<Vec<Simplex>>,
    weights: Vec<Vec<u32>>,
    index: Vec<HashMap<Simplex, usize>>,
    names: Option<Vec<String>>,
}

impl WeightedComplex {
    /// Builds and validates a complex from `(vertices, weight)` entries.
    ///
    /// With `auto_close`, missing faces are added with the largest weight
    /// among their cofaces (explicit weights always win).
    pub fn new<I>(field: Field, entries: I, auto_close: bool) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = (Vec<u32>, u32)>,
    {
        let mut explicit: BTreeMap<Simplex, u32> = BTreeMap::new();
        for (v, w) in entries {
            let s = Simplex::new(v)?;
            if explicit.insert(s.clone(), w).is_some() {
                return Err(ComplexError::Duplicate(s));
            }
        }
        let mut all = explicit.clone();
        if auto_close {
            let top = all.keys().map(Simplex::dim).max().unwrap_or(0);
            for n in (1..=top).rev() {
                let level: Vec<(Simplex, u32)> = all
                    .iter()
                    .filter(|(s, _)| s.dim() == n)
                    .map(|(s, &w)| (s.clone(), w))
                    .collect();
                for (s, w) in level {
                    for (_, face) in s.faces() {
                        if explicit.contains_key(&face) {
                            continue;
                        }
                        let e = all.entry(face).or_insert(w);
                        *e = (*e).max(w);
                    }
                }
            }
        }
        let x = Self::from_parts_unchecked(field, all);
        let violations = x.validate();
        if violations.is_empty() {
            Ok(x)
        } else {
            Err(ComplexError::Invalid(violations))
        }
    }

    /// Stores simplices as given (sorted canonically) without checking
    /// closure or monotonicity; see [`WeightedComplex::validate`].
    pub fn from_parts_unchecked(field: Field, entries: impl IntoIterator<Item = (Simplex, u32)>) -> Self {
        let sorted: BTreeMap<Simplex, u32> = entries.into_iter().collect();
        let top = sorted.keys().map(Simplex::dim).max();
        let levels = top.map_or(0, |t| t + 1);
        let mut simplices = vec![Vec::new(); levels];
        let mut weights = vec![Vec::new(); levels];
        for (s, w) in sorted {
            let n = s.dim();
            simplices[n].push(s);
            weights[n].push(w);
        }
        let index = simplices
            .iter()
            .map(|ss| ss.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        WeightedComplex {
            field,
            simplices,
            weights,
            index,
            names: None,
        }
    }

    pub fn empty(field: Field) -> Self {
        Self::from_parts_unchecked(field, std::iter::empty())
    }

    /// Every closure and monotonicity violation, checked on codimension-one
    /// face pairs (which suffices once closure holds).
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for n in 1..self.simplices.len() {
            for (s, &w) in self.simplices[n].iter().zip(&self.weights[n]) {
                for (_, face) in s.faces() {
                    match self.weight(&face) {
                        None => out.push(Violation::MissingFace {
                            simplex: s.clone(),
                            face,
                        }),
                        Some(fw) if fw < w => out.push(Violation::NonMonotone {
                            face,
                            face_weight: fw,
                            coface: s.clone(),
                            coface_weight: w,
                        }),
                        Some(_) => {}
                    }
                }
            }
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn with_field(&self, field: Field) -> Self {
        WeightedComplex {
            field,
            ..self.clone()
        }
    }

    pub fn with_names(mut self, names: Option<Vec<String>>) -> Self {
        self.names = names;
        self
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Highest simplex dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Number of `n`-simplices (zero above the top dimension).
    pub fn count(&self, n: usize) -> usize {
        self.simplices.get(n).map_or(0, Vec::len)
    }

    pub fn total_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn simplices(&self, n: usize) -> &[Simplex] {
        self.simplices.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn weights(&self, n: usize) -> &[u32] {
        self.weights.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn weight(&self, s: &Simplex) -> Option<u32> {
        let i = self.index_of(s)?;
        Some(self.weights[s.dim()][i])
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, u32)> {
        self.simplices
            .iter()
            .zip(&self.weights)
            .flat_map(|(ss, ws)| ss.iter().zip(ws.iter().copied()))
    }

    pub fn weighting(&self) -> Weighting {
        Weighting(self.weights.clone())
    }

    /// Same simplices under another weighting; fails when the weighting has
    /// the wrong shape or breaks monotonicity.
    pub fn with_weighting(&self, w: &Weighting) -> Result<Self, ComplexError> {
        if w.shape() != self.simplices.iter().map(Vec::len).collect::<Vec<_>>() {
            return Err(ComplexError::ShapeMismatch);
        }
        let x = WeightedComplex {
            weights: w.0.clone(),
            ..self.clone()
        };
        let violations = x.validate();
        if violations.is_empty() {
            Ok(x)
        } else {
            Err(ComplexError::Invalid(violations))
        }
    }

    /// All simplices of dimension at most `n`, with inherited weights.
    pub fn skeleton(&self, n: usize) -> Self {
        let keep = (n + 1).min(self.simplices.len());
        WeightedComplex {
            field: self.field,
            simplices: self.simplices[..keep].to_vec(),
            weights: self.weights[..keep].to_vec(),
            index: self.index[..keep].to_vec(),
            names: self.names.clone(),
        }
    }

    /// Same simplices with every weight equal to `c`.
    pub fn constant_weight(&self, c: u32) -> Self {
        WeightedComplex {
            weights: self.weights.iter().map(|ws| vec![c; ws.len()]).collect(),
            ..self.clone()
        }
    }

    /// Human-readable simplex label using the name table when present:
    /// single-character names are concatenated (`ABC`), others bracketed.
    pub fn label(&self, s: &Simplex) -> String {
        match &self.names {
            Some(names) => {
                let parts: Vec<&str> = s
                    .vertices()
                    .iter()
                    .map(|&v| names.get(v as usize).map(String::as_str).unwrap_or("?"))
                    .collect();
                if parts.iter().all(|p| p.chars().count() == 1) {
                    parts.concat()
                } else {
                    format!("[{}]", parts.join(","))
                }
            }
            None => s.to_string(),
        }
    }

    /// Resolves a label produced by [`WeightedComplex::label`] (or a raw
    /// `[0,1]` list) back to a simplex of this complex.
    pub fn find_label(&self, label: &str) -> Option<Simplex> {
        self.iter()
            .map(|(s, _)| s)
            .find(|s| self.label(s) == label || s.to_string() == label)
            .cloned()
    }
}
