use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Simplex, WeightedComplex, Weighting};
use crate::ring::Field;

/// Size limits for [`random_complex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub max_dim: usize,
    /// Upper bound on the number of simplices in each dimension.
    pub per_dim: usize,
    pub max_weight: u32,
}

/// Seeded random valid complex over the rationals.
///
/// Built bottom-up: vertices, then random edges, then higher simplices whose
/// boundary is already present. Maximal simplices get uniform weights; every
/// other simplex gets the largest coface weight plus a small increment,
/// capped at `max_weight`.
pub fn random_complex(seed: u64, params: RandomParams) -> WeightedComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if params.per_dim == 0 {
        return WeightedComplex::empty(Field::Rational);
    }
    let n_vertices = rng.gen_range(1..=params.per_dim) as u32;
    let mut levels: Vec<Vec<Simplex>> = vec![(0..n_vertices).map(|v| Simplex(vec![v])).collect()];
    for k in 1..=params.max_dim {
        let prev = &levels[k - 1];
        let prev_set: std::collections::HashSet<&Simplex> = prev.iter().collect();
        let mut candidates = Vec::new();
        for s in prev {
            let last = *s.0.last().unwrap();
            for v in last + 1..n_vertices {
                let mut verts = s.0.clone();
                verts.push(v);
                let c = Simplex(verts);
                if c.faces().all(|(_, f)| prev_set.contains(&f)) {
                    candidates.push(c);
                }
            }
        }
        if candidates.is_empty() {
            break;
        }
        candidates.shuffle(&mut rng);
        let lo = params.per_dim / 2;
        let take = rng.gen_range(lo..=params.per_dim).min(candidates.len());
        candidates.truncate(take);
        candidates.sort();
        if candidates.is_empty() {
            break;
        }
        levels.push(candidates);
    }
    let shape = WeightedComplex::from_parts_unchecked(
        Field::Rational,
        levels.into_iter().flatten().map(|s| (s, 0)),
    );
    let w = random_weighting(&shape, &mut rng, params.max_weight);
    shape.with_weighting(&w).expect("generated weights are monotone")
}

fn random_weighting(x: &WeightedComplex, rng: &mut ChaCha8Rng, max: u32) -> Weighting {
    let top = match x.dim() {
        Some(d) => d,
        None => return Weighting(Vec::new()),
    };
    // largest coface weight seen so far, per simplex
    let mut coface_max: Vec<Vec<Option<u32>>> = (0..=top).map(|n| vec![None; x.count(n)]).collect();
    let mut values: Vec<Vec<u32>> = (0..=top).map(|n| vec![0; x.count(n)]).collect();
    for n in (0..=top).rev() {
        for (i, s) in x.simplices(n).iter().enumerate() {
            let w = match coface_max[n][i] {
                None => rng.gen_range(0..=max),
                Some(m) => (m + rng.gen_range(0..=2)).min(max),
            };
            values[n][i] = w;
            for (_, f) in s.faces() {
                let j = x.index_of(&f).expect("closed");
                let slot = &mut coface_max[n - 1][j];
                *slot = Some(slot.map_or(w, |m| m.max(w)));
            }
        }
    }
    Weighting(values)
}

/// A second monotone weighting `w'` with `w' <= w` pointwise: the minimum of
/// the complex's own weights and a fresh random monotone weighting.
pub fn random_subweighting(x: &WeightedComplex, seed: u64) -> Weighting {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed);
    let max = x.iter().map(|(_, w)| w).max().unwrap_or(0);
    let other = random_weighting(x, &mut rng, max);
    Weighting(
        other
            .0
            .iter()
            .enumerate()
            .map(|(n, ws)| ws.iter().zip(x.weights(n)).map(|(&a, &b)| a.min(b)).collect())
            .collect(),
    )
}
