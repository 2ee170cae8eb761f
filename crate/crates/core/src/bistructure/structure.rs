use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::BiStructureError;

/// Non-crossing arcs on a backbone `1..=length`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SecondaryStructure {
    length: usize,
    /// 1-based `(i, j)`, `i < j`, sorted by `i`.
    arcs: Vec<(usize, usize)>,
}

impl SecondaryStructure {
    pub fn new(length: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self, BiStructureError> {
        arcs.sort_unstable();
        let mut used = vec![false; length + 1];
        for &(i, j) in &arcs {
            if i == 0 || i >= j || j > length {
                return Err(BiStructureError::BadArc(i, j));
            }
            for e in [i, j] {
                if std::mem::replace(&mut used[e], true) {
                    return Err(BiStructureError::SharedEndpoint(e));
                }
            }
        }
        for (a, &(i, j)) in arcs.iter().enumerate() {
            for &(k, l) in &arcs[a + 1..] {
                if k < j && j < l {
                    return Err(BiStructureError::Crossing((i, j), (k, l)));
                }
            }
        }
        Ok(SecondaryStructure { length, arcs })
    }

    /// Parses dot-bracket notation: `(` and `)` pair up, `.` is unpaired.
    pub fn parse(s: &str) -> Result<Self, BiStructureError> {
        let mut stack = Vec::new();
        let mut arcs = Vec::new();
        let mut length = 0;
        for (k, c) in s.chars().enumerate() {
            let pos = k + 1;
            length = pos;
            match c {
                '.' => {}
                '(' => stack.push(pos),
                ')' => {
                    let i = stack.pop().ok_or(BiStructureError::Unbalanced(pos))?;
                    arcs.push((i, pos));
                }
                other => return Err(BiStructureError::IllegalCharacter(pos, other)),
            }
        }
        if let Some(&open) = stack.last() {
            return Err(BiStructureError::Unbalanced(open));
        }
        Self::new(length, arcs)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Partner of each position (index 0 unused).
    fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.length + 2];
        for &(i, j) in &self.arcs {
            p[i] = Some(j);
            p[j] = Some(i);
        }
        p
    }

    /// Vertices covered by the arc `(i, j)`: its endpoints plus every
    /// position between them not strictly inside a child arc. `(0, L+1)`
    /// is the exterior rainbow; its endpoints are not backbone positions.
    fn covered(&self, i: usize, j: usize, partners: &[Option<usize>]) -> Vec<usize> {
        let mut out = Vec::new();
        if i >= 1 {
            out.push(i);
        }
        let mut k = i + 1;
        while k < j {
            out.push(k);
            match partners[k] {
                Some(q) if q > k => {
                    out.push(q);
                    k = q + 1;
                }
                _ => k += 1,
            }
        }
        if j <= self.length {
            out.push(j);
        }
        out
    }

    /// The exterior loop first, then one loop per arc in arc order.
    pub fn loops(&self, owner: Owner) -> Vec<Loop> {
        let partners = self.partners();
        let mut out = vec![Loop {
            owner,
            arc: None,
            vertices: self.covered(0, self.length + 1, &partners),
        }];
        for &(i, j) in &self.arcs {
            out.push(Loop {
                owner,
                arc: Some((i, j)),
                vertices: self.covered(i, j, &partners),
            });
        }
        out
    }

    /// Random structure of the given length; `pair_prob` is the chance each
    /// examined position opens an arc.
    pub fn random<R: Rng>(rng: &mut R, length: usize, pair_prob: f64) -> Self {
        fn fill<R: Rng>(rng: &mut R, i: usize, j: usize, p: f64, arcs: &mut Vec<(usize, usize)>) {
            // positions i..=j
            if i >= j {
                return;
            }
            if !rng.gen_bool(p) {
                return fill(rng, i + 1, j, p, arcs);
            }
            let k = rng.gen_range(i + 1..=j);
            arcs.push((i, k));
            fill(rng, i + 1, k - 1, p, arcs);
            fill(rng, k + 1, j, p, arcs);
        }
        let mut arcs = Vec::new();
        fill(rng, 1, length, pair_prob, &mut arcs);
        Self::new(length, arcs).expect("recursive construction is non-crossing")
    }
}

impl fmt::Display for SecondaryStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = vec!['.'; self.length];
        for &(i, j) in &self.arcs {
            s[i - 1] = '(';
            s[j - 1] = ')';
        }
        f.write_str(&s.into_iter().collect::<String>())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Owner {
    S,
    T,
}

/// Vertices covered by one arc, or by the exterior rainbow when `arc` is
/// `None`. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Loop {
    pub owner: Owner,
    pub arc: Option<(usize, usize)>,
    pub vertices: Vec<usize>,
}

impl Loop {
    pub fn name(&self) -> String {
        let o = match self.owner {
            Owner::S => "S",
            Owner::T => "T",
        };
        match self.arc {
            None => format!("{o}:ext"),
            Some((i, j)) => format!("{o}:{i}-{j}"),
        }
    }
}
