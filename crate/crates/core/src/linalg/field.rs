//! Classical linear algebra over the residue field.

use crate::ring::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero");
        for x in rows[r].iter_mut() {
            *x = x.try_mul(&inv).expect("same field");
        }
        for i in 0..nr {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let (head, tail) = rows.split_at_mut(r.max(i));
            let (src, dst) = if i < r { (&tail[0], &mut head[i]) } else { (&head[r], &mut tail[0]) };
            for (x, y) in dst.iter_mut().zip(src.iter()) {
                *x = x.try_sub(&f.try_mul(y).expect("same field")).expect("same field");
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of the right null space `{x : A x = 0}` of a matrix with `ncols`
/// columns.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize, zero: &Scalar, one: &Scalar) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![zero.clone(); ncols];
            x[f] = one.clone();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = m[r][f].neg();
            }
            x
        })
        .collect()
}
