use super::compute::boundaries_in_basis;
use super::{check_dim, HomologyError, ModuleInvariants};
use crate::chain::{boundary_matrix, theta, SparseMatrix};
use crate::complex::{WeightedComplex, Weighting};
use crate::linalg::{kernel_basis, smith_normal_form, MembershipSolver};
use crate::ring::LocalElement;

/// Homology of the quotient complex `C(X, R) / theta(C(X, R))`, where theta
/// runs from the weighting `source` to the complex's own weights.
///
/// Cycles are `{c : d c in theta(C_(n-1))}`, found as the projection of
/// `ker [d_n | -theta_(n-1)]`; boundaries are `im d_(n+1) + im theta_n`.
pub fn quotient_homology(
    x: &WeightedComplex,
    source: &Weighting,
    n: usize,
) -> Result<ModuleInvariants, HomologyError> {
    check_dim(x, n)?;
    let field = x.field();
    let target = x.weighting();
    let count = x.count(n);
    let theta_n = theta(x, source, &target, n)?;
    let cycles: Vec<Vec<LocalElement>> = if n == 0 {
        SparseMatrix::identity(field, count)
            .to_dense()
    } else {
        let theta_prev = theta(x, source, &target, n - 1)?;
        let neg = SparseMatrix::zeros(field, theta_prev.nrows(), theta_prev.ncols()).sub(&theta_prev);
        let a = boundary_matrix(x, n).hstack(&neg);
        kernel_basis(&a).into_iter().map(|v| v[..count].to_vec()).collect()
    };
    let z = SparseMatrix::from_columns(field, count, cycles);
    let gens = boundary_matrix(x, n + 1).hstack(&theta_n);
    let solver = MembershipSolver::new(&z);
    let coords = (0..gens.ncols())
        .map(|j| {
            solver
                .solve(&gens.column_dense(j))
                .expect("boundaries and theta images are quotient cycles")
        })
        .collect();
    let c = SparseMatrix::from_columns(field, z.ncols(), coords);
    let snf = smith_normal_form(&c);
    Ok(ModuleInvariants::new(z.ncols() - snf.rank(), snf.exponents))
}

/// Cokernel of the map induced by theta from unweighted homology
/// `H_n(X, R)` into the weighted homology, computed in cycle-basis
/// coordinates.
pub fn theta_cokernel(x: &WeightedComplex, n: usize) -> Result<ModuleInvariants, HomologyError> {
    check_dim(x, n)?;
    let field = x.field();
    let (kappa, b) = boundaries_in_basis(x, n)?;
    let classical = kernel_basis(&boundary_matrix(&x.constant_weight(0), n));
    let weights = x.weights(n);
    let images: Vec<Vec<LocalElement>> = classical
        .iter()
        .map(|z| {
            kappa
                .iter()
                .map(|&k| &z[k] * &LocalElement::signed_power(field, false, weights[k]))
                .collect()
        })
        .collect();
    let t = SparseMatrix::from_columns(field, kappa.len(), images);
    let snf = smith_normal_form(&b.hstack(&t));
    Ok(ModuleInvariants::new(kappa.len() - snf.rank(), snf.exponents))
}
