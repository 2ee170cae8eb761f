//! Exact matrix reduction over `R`: valuation-pivot column reduction, Smith
//! normal form, kernels and membership, plus integer Smith normal form and
//! classical linear algebra over the residue field.

pub mod field;
mod integer;
mod reduce;
mod snf;

pub use integer::{integer_snf, IntMatrix, IntegerSnf};
#[cfg(test)]
pub(crate) use integer::int_mul;
pub use reduce::{reduce_columns, Pivot, ReductionResult};
pub use snf::{smith_normal_form, SnfResult};

use thiserror::Error;

use crate::chain::SparseMatrix;
use crate::ring::{LocalElement, Valuation};

/// Why `M x = b` has no solution over `R`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("vector is not in the span of the columns, even over the fraction field")]
    NotInSpan,
    #[error("solution needs pi^-{deficit} (component {component})")]
    NeedsInverse { component: usize, deficit: u32 },
}

/// R-basis of `{x : M x = 0}`. The vectors are columns of a unimodular
/// transform, hence primitive.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<LocalElement>> {
    let red = reduce_columns(m);
    red.zero_columns()
        .into_iter()
        .map(|j| red.transform.column_dense(j))
        .collect()
}

/// Reusable solver for `M x = b` over `R`, backed by one Smith form of `M`.
#[derive(Clone, Debug)]
pub struct MembershipSolver {
    snf: SnfResult,
    nrows: usize,
    ncols: usize,
    field: crate::ring::Field,
}

impl MembershipSolver {
    pub fn new(m: &SparseMatrix) -> Self {
        MembershipSolver {
            snf: smith_normal_form(m),
            nrows: m.nrows(),
            ncols: m.ncols(),
            field: m.field(),
        }
    }

    pub fn solve(&self, b: &[LocalElement]) -> Result<Vec<LocalElement>, MembershipError> {
        assert_eq!(b.len(), self.nrows, "right-hand side length");
        let ub = self.snf.left.mul_vec(b);
        let mut y = vec![LocalElement::zero(self.field); self.ncols];
        for (i, c) in ub.iter().enumerate() {
            match self.snf.exponents.get(i) {
                Some(&e) => {
                    let v = c.valuation();
                    if v < Valuation::Finite(e) {
                        let have = v.finite().expect("finite below e");
                        return Err(MembershipError::NeedsInverse {
                            component: i,
                            deficit: e - have,
                        });
                    }
                    y[i] = c
                        .divide_exact(&LocalElement::signed_power(self.field, false, e))
                        .expect("valuation checked");
                }
                None if !c.is_zero() => return Err(MembershipError::NotInSpan),
                None => {}
            }
        }
        Ok(self.snf.right.mul_vec(&y))
    }
}

/// Solves `M x = b` over `R` through the Smith form of `M`.
pub fn solve_membership(m: &SparseMatrix, b: &[LocalElement]) -> Result<Vec<LocalElement>, MembershipError> {
    MembershipSolver::new(m).solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::boundary_matrix;
    use crate::fixtures;
    use crate::ring::Field;
    use num_bigint::BigInt;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const Q: Field = Field::Rational;

    fn pw(k: u32) -> LocalElement {
        LocalElement::signed_power(Q, false, k)
    }

    fn el(s: &str) -> LocalElement {
        LocalElement::parse(s, Q).unwrap()
    }

    fn det_valuation_is_zero(t: &SparseMatrix) -> bool {
        // a square matrix over R is invertible iff its residue is invertible over F
        field::rank(&t.residue()) == t.nrows()
    }

    fn random_monomial_matrix(rng: &mut ChaCha8Rng, nr: usize, nc: usize, field: Field) -> SparseMatrix {
        let rows = (0..nr)
            .map(|_| {
                (0..nc)
                    .map(|_| {
                        if rng.gen_bool(0.35) {
                            LocalElement::zero(field)
                        } else {
                            let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { -1 } else { 1 };
                            LocalElement::monomial(field.from_i64(c), rng.gen_range(0..5))
                        }
                    })
                    .collect()
            })
            .collect();
        SparseMatrix::from_rows(field, nc, rows)
    }

    #[test]
    fn reduce_zero_matrix() {
        let r = reduce_columns(&SparseMatrix::zeros(Q, 3, 4));
        assert_eq!(r.rank(), 0);
        assert_eq!(r.zero_columns(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn reduce_diagonal_unchanged() {
        let m = SparseMatrix::diagonal(Q, vec![pw(2), pw(5)]);
        let r = reduce_columns(&m);
        assert_eq!(r.reduced, m);
        assert_eq!(r.pivot_columns(), vec![0, 1]);
        assert_eq!(r.transform, SparseMatrix::identity(Q, 2));
    }

    #[test]
    fn reduce_kite_edges() {
        let x = fixtures::kite();
        let d1 = boundary_matrix(&x, 1);
        let r = reduce_columns(&d1);
        assert_eq!(r.rank(), 3);
        assert_eq!(r.zero_columns().len(), 3);
        assert_eq!(d1.mul(&r.transform), r.reduced);
        assert!(det_valuation_is_zero(&r.transform));
    }

    #[test]
    fn snf_examples() {
        let m = SparseMatrix::diagonal(Q, vec![pw(3), pw(1)]);
        assert_eq!(smith_normal_form(&m).exponents, vec![1, 3]);
        let m = SparseMatrix::from_rows(Q, 2, vec![vec![pw(1), pw(1)], vec![pw(1), pw(1)]]);
        assert_eq!(smith_normal_form(&m).exponents, vec![1]);
        let m = SparseMatrix::from_rows(Q, 2, vec![vec![el("1 + pi"), el("pi")], vec![el("pi^2"), el("pi^3")]]);
        let s = smith_normal_form(&m);
        // determinant (1 + pi) pi^3 - pi^3 = pi^4
        assert_eq!(s.exponents, vec![0, 4]);
        let d = s.left.mul(&m).mul(&s.right);
        assert_eq!(d, SparseMatrix::diagonal(Q, vec![pw(0), pw(4)]));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(Q, 3)).is_empty());
        let k = kernel_basis(&SparseMatrix::zeros(Q, 2, 3));
        assert_eq!(k.len(), 3);
        let x = fixtures::kite();
        let d1 = boundary_matrix(&x, 1);
        let k = kernel_basis(&d1);
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(d1.mul_vec(v).iter().all(LocalElement::is_zero));
        }
    }

    #[test]
    fn membership_examples() {
        let m = SparseMatrix::diagonal(Q, vec![pw(2)]);
        assert_eq!(solve_membership(&m, &[pw(3)]).unwrap(), vec![pw(1)]);
        assert_eq!(
            solve_membership(&m, &[pw(1)]),
            Err(MembershipError::NeedsInverse { component: 0, deficit: 1 })
        );
        let m = SparseMatrix::from_rows(Q, 1, vec![vec![pw(0)], vec![pw(0)]]);
        assert_eq!(solve_membership(&m, &[pw(0), pw(1)]), Err(MembershipError::NotInSpan));
    }

    fn theta_of_cycle(x: &crate::complex::WeightedComplex, terms: &[(&str, bool)]) -> Vec<LocalElement> {
        let mut b = vec![LocalElement::zero(Q); x.count(1)];
        for &(l, negative) in terms {
            let s = x.find_label(l).unwrap();
            let w = x.weight(&s).unwrap();
            b[x.index_of(&s).unwrap()] = LocalElement::signed_power(Q, negative, w);
        }
        assert!(boundary_matrix(x, 1).mul_vec(&b).iter().all(LocalElement::is_zero));
        b
    }

    #[test]
    fn kite_membership_of_theta_cycles() {
        let x = fixtures::kite();
        let d2 = boundary_matrix(&x, 2);
        // AB + BC - AC bounds ABC, and its theta image is pi^2 times the weighted boundary
        let b = theta_of_cycle(&x, &[("AB", false), ("BC", false), ("AC", true)]);
        let y = solve_membership(&d2, &b).unwrap();
        let abc = x.index_of(&x.find_label("ABC").unwrap()).unwrap();
        assert_eq!(y[abc], pw(2));
        // AB + BD - AD goes around the hole
        let b = theta_of_cycle(&x, &[("AB", false), ("BD", false), ("AD", true)]);
        assert_eq!(solve_membership(&d2, &b), Err(MembershipError::NotInSpan));
    }

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn check_int_snf(m: &IntMatrix, nc: usize) -> IntegerSnf {
        let s = integer_snf(m, nc);
        let nr = m.len();
        let d = int_mul(&int_mul(&s.left, m, nr, nc), &s.right, nc, nc);
        for i in 0..nr {
            for j in 0..nc {
                let expect = if i == j && i < s.rank() { s.diagonal[i].clone() } else { BigInt::from(0) };
                assert_eq!(d[i][j], expect);
            }
        }
        let id = int_mul(&s.left, &s.left_inverse, nr, nr);
        for (i, row) in id.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, BigInt::from((i == j) as i64));
            }
        }
        for w in s.diagonal.windows(2) {
            assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
        s
    }

    #[test]
    fn integer_snf_examples() {
        assert_eq!(check_int_snf(&ints(&[&[2]]), 1).diagonal, vec![BigInt::from(2)]);
        let id = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(check_int_snf(&id, 3).diagonal, vec![BigInt::from(1); 3]);
        let m = ints(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let d: Vec<i64> = check_int_snf(&m, 3).diagonal.iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
        assert!(check_int_snf(&Vec::new(), 4).diagonal.is_empty());
    }

    #[test]
    fn random_integer_snf_transforms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let nr = rng.gen_range(0..6);
            let nc = rng.gen_range(0..6);
            let m: IntMatrix = (0..nr)
                .map(|_| (0..nc).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect())
                .collect();
            check_int_snf(&m, nc);
        }
    }

    #[test]
    fn snf_transforms_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for field in [Q, Field::Prime(2), Field::Prime(5)] {
            for _ in 0..40 {
                let nr = rng.gen_range(0..7);
                let nc = rng.gen_range(0..7);
                let m = random_monomial_matrix(&mut rng, nr, nc, field);
                let s = smith_normal_form(&m);
                let d = s.left.mul(&m).mul(&s.right);
                for (i, j, e) in d.entries() {
                    assert_eq!(i, j);
                    assert_eq!(e, &LocalElement::signed_power(field, false, s.exponents[i]));
                }
                assert_eq!(d.nnz(), s.rank());
                assert!(s.exponents.windows(2).all(|w| w[0] <= w[1]));
                assert!(det_valuation_is_zero(&s.left) && det_valuation_is_zero(&s.right));

                let r = reduce_columns(&m);
                assert_eq!(m.mul(&r.transform), r.reduced);
                assert!(det_valuation_is_zero(&r.transform));
                let mut pv: Vec<u32> = r.pivots.iter().map(|p| p.valuation).collect();
                pv.sort_unstable();
                assert_eq!(pv, s.exponents);

                let k = kernel_basis(&m);
                assert_eq!(k.len(), nc - s.rank());
                for v in &k {
                    assert!(m.mul_vec(v).iter().all(LocalElement::is_zero));
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn snf_invariant_under_permutation(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (nr, nc) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let m = random_monomial_matrix(&mut rng, nr, nc, Q);
            let mut rows: Vec<usize> = (0..nr).collect();
            let mut cols: Vec<usize> = (0..nc).collect();
            rows.shuffle(&mut rng);
            cols.shuffle(&mut rng);
            let p = m.permute_rows(&rows).select_columns(&cols);
            prop_assert_eq!(smith_normal_form(&p).exponents, smith_normal_form(&m).exponents);
        }

        #[test]
        fn membership_recovers_images(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (nr, nc) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let m = random_monomial_matrix(&mut rng, nr, nc, Q);
            let x: Vec<LocalElement> = (0..nc).map(|_| pw(rng.gen_range(0..3))).collect();
            let b = m.mul_vec(&x);
            let y = solve_membership(&m, &b).unwrap();
            prop_assert_eq!(m.mul_vec(&y), b.clone());
            // pushing b out of the image by one power of pi
            if let Some(i) = b.iter().position(|v| !v.is_zero()) {
                let e = b[i].valuation().finite().unwrap();
                let mut c = b.clone();
                c[i] = &c[i] + &pw(e + 7);
                if let Ok(z) = solve_membership(&m, &c) {
                    prop_assert_eq!(m.mul_vec(&z), c);
                }
            }
        }
    }
}
