use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Integer Smith normal form `U * M * V = diag(d1, d2, ...)` with
/// `d1 | d2 | ...`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSnf {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    /// Inverse of `left`, kept in step with it.
    pub left_inverse: IntMatrix,
    pub right: IntMatrix,
}

impl IntegerSnf {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

struct State {
    a: IntMatrix,
    u: IntMatrix,
    uinv: IntMatrix,
    v: IntMatrix,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in self.uinv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                *x += q * y;
            }
        }
        // inverse: col_j -= q * col_i
        for row in self.uinv.iter_mut() {
            let t = q * &row[i];
            row[j] -= t;
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let t = q * &row[j];
            row[i] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = -&*x;
        }
        for row in self.uinv.iter_mut() {
            row[i] = -&row[i];
        }
    }
}

/// Smith normal form over the integers with explicit transforms.
pub fn integer_snf(m: &IntMatrix, ncols: usize) -> IntegerSnf {
    let nr = m.len();
    let nc = ncols;
    let mut s = State {
        a: m.clone(),
        u: identity(nr),
        uinv: identity(nr),
        v: identity(nc),
    };
    let mut diagonal = Vec::new();
    for k in 0..nr.min(nc) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(BigInt, usize, usize)> = None;
            for i in k..nr {
                for j in k..nc {
                    let x = s.a[i][j].abs();
                    if !x.is_zero() && best.as_ref().is_none_or(|b| x < b.0) {
                        best = Some((x, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                return finish(s, diagonal);
            };
            s.swap_rows(k, pi);
            s.swap_cols(k, pj);
            let mut clean = true;
            for i in k + 1..nr {
                if s.a[i][k].is_zero() {
                    continue;
                }
                let q = s.a[i][k].div_floor(&s.a[k][k]);
                s.add_row(i, k, &-q);
                if !s.a[i][k].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..nc {
                if s.a[k][j].is_zero() {
                    continue;
                }
                let q = s.a[k][j].div_floor(&s.a[k][k]);
                s.add_col(j, k, &-q);
                if !s.a[k][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the trailing block
            let bad = (k + 1..nr).find(|&i| (k + 1..nc).any(|j| !s.a[i][j].is_multiple_of(&s.a[k][k])));
            match bad {
                Some(i) => s.add_row(k, i, &BigInt::one()),
                None => break,
            }
        }
        if s.a[k][k].is_negative() {
            s.negate_row(k);
        }
        diagonal.push(s.a[k][k].clone());
    }
    finish(s, diagonal)
}

fn finish(s: State, diagonal: Vec<BigInt>) -> IntegerSnf {
    IntegerSnf {
        diagonal,
        left: s.u,
        left_inverse: s.uinv,
        right: s.v,
    }
}

#[cfg(test)]
pub(crate) fn int_mul(a: &IntMatrix, b: &IntMatrix, inner: usize, ncols: usize) -> IntMatrix {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}
