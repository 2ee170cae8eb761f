use super::*;
use crate::chain::boundary_matrix;
use crate::complex::{random_complex, RandomParams, Weighting};
use crate::fixtures;
use crate::linalg::{field, reduce_columns, smith_normal_form};
use crate::ring::Valuation;
use proptest::prelude::*;

fn labels(x: &WeightedComplex, n: usize, idx: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = idx.iter().map(|&i| x.label(&x.simplices(n)[i])).collect();
    v.sort();
    v
}

fn idx(x: &WeightedComplex, label: &str) -> usize {
    x.index_of(&x.find_label(label).unwrap()).unwrap()
}

fn inv(rank: usize, torsion: &[u32]) -> ModuleInvariants {
    ModuleInvariants::new(rank, torsion.iter().copied())
}

const SUITE: RandomParams = RandomParams { max_dim: 3, per_dim: 12, max_weight: 10 };

#[test]
fn kite_split() {
    let x = fixtures::kite();
    let s = kappa_mu_split(&x, 1, None).unwrap();
    assert_eq!(labels(&x, 1, &s.kappa), ["AB", "AC", "BC"]);
    assert_eq!(labels(&x, 1, &s.mu), ["AD", "BD", "CD"]);
    for seed in 0..20 {
        let order = random_order(x.count(1), seed);
        let s = kappa_mu_split(&x, 1, Some(&order)).unwrap();
        assert_eq!(s.kappa.len(), 3);
        // max-weight edges always carry the image here
        assert_eq!(labels(&x, 1, &s.mu), ["AD", "BD", "CD"]);
    }
    let s0 = kappa_mu_split(&x, 0, None).unwrap();
    assert_eq!(s0.kappa, vec![0, 1, 2, 3]);
    assert!(s0.mu.is_empty());
    assert!(kappa_mu_split(&x, 3, None).is_err());
    assert!(kappa_mu_split(&x, 1, Some(&[0, 0, 1, 2, 3, 4])).is_err());
}

#[test]
fn kite_basis_cycles() {
    let x = fixtures::kite();
    let s = kappa_mu_split(&x, 1, None).unwrap();
    let basis = k_basis(&x, &s);
    let support = |k: &str| -> Vec<(String, u32)> {
        let b = basis.iter().find(|b| b.kappa == idx(&x, k)).unwrap();
        let mut v: Vec<(String, u32)> = b
            .coefficients
            .iter()
            .map(|(m, c)| (x.label(&x.simplices(1)[*m]), c.valuation().finite().unwrap()))
            .collect();
        v.sort();
        v
    };
    assert_eq!(support("AC"), [("AD".into(), 2), ("CD".into(), 1)]);
    assert_eq!(support("AB"), [("AD".into(), 4), ("BD".into(), 5)]);
    assert_eq!(support("BC"), [("BD".into(), 4), ("CD".into(), 2)]);
    let d1 = boundary_matrix(&x, 1);
    for b in &basis {
        assert!(d1.mul_vec(&b.to_vector(x.field(), 6)).iter().all(|e| e.is_zero()));
    }
}

#[test]
fn constant_weight_basis_has_field_coefficients() {
    let x = fixtures::torus().constant_weight(3);
    let s = kappa_mu_split(&x, 1, None).unwrap();
    for b in k_basis(&x, &s) {
        assert!(b.coefficients.iter().all(|(_, c)| c.valuation() == Valuation::Finite(0)));
    }
}

#[test]
fn kite_homology() {
    let x = fixtures::kite();
    assert_eq!(homology_direct(&x, 1).unwrap(), inv(1, &[1, 4]));
    assert_eq!(homology_direct(&x, 1).unwrap().to_string(), "R^1 (+) R/(pi^1) (+) R/(pi^4)");
    // vertex weight 100 against the mu edges BD, AD, CD
    assert_eq!(homology_direct(&x, 0).unwrap(), inv(1, &[92, 93, 94]));
    assert_eq!(homology_direct(&x, 2).unwrap(), inv(0, &[]));
    assert_eq!(field_homology_rank(&x, 1), 1);
}

#[test]
fn filled_triangle_homology() {
    let x = fixtures::filled_triangle();
    assert_eq!(homology_direct(&x, 1).unwrap(), inv(0, &[1]));
    assert_eq!(homology_structure(&x, 1).unwrap().0, inv(0, &[1]));
}

#[test]
fn kite_pairing() {
    let x = fixtures::kite();
    let (h, p) = homology_structure(&x, 1).unwrap();
    assert_eq!(h, inv(1, &[1, 4]));
    let rows: Vec<(String, String, u32)> =
        p.labeled(&x).into_iter().map(|r| (r.kappa, r.mu, r.exponent)).collect();
    assert_eq!(rows, [("AB".into(), "ABC".into(), 1), ("AC".into(), "ACD".into(), 4)]);
    assert_eq!(p.free_labels(&x), ["BC"]);
    let (h0, p0) = homology_structure(&x, 0).unwrap();
    assert_eq!(h0, inv(1, &[92, 93, 94]));
    assert_eq!(p0.pairs.len(), 3);
}

#[test]
fn constant_weight_has_no_torsion() {
    for (_, x) in fixtures::all() {
        let x = x.constant_weight(7);
        for n in 0..=x.dim().unwrap() {
            let (h, p) = homology_structure(&x, n).unwrap();
            assert!(h.torsion.is_empty());
            assert!(p.pairs.iter().all(|e| e.exponent == 0));
            assert_eq!(h, homology_direct(&x, n).unwrap());
        }
    }
}

#[test]
fn field_ranks() {
    assert_eq!(field_homology_rank(&fixtures::loop_nerve(), 2), 1);
    let hollow = fixtures::filled_triangle().skeleton(1);
    assert_eq!(field_homology_rank(&hollow, 1), 1);
    let rp2 = fixtures::rp2();
    assert_eq!(field_homology_rank(&rp2, 1), 0);
    assert_eq!(field_homology_rank(&rp2.with_field(crate::ring::Field::Prime(2)), 1), 1);
    assert_eq!(field_homology_rank(&fixtures::torus(), 1), 2);
}

#[test]
fn fallback_matching_realizes_exponents() {
    let x = fixtures::kite();
    let s = kappa_mu_split(&x, 1, None).unwrap();
    let mus = vec![idx(&x, "ABC"), idx(&x, "ACD")];
    let pairs = compute::match_by_weights(&s.kappa, &mus, &x, 1, &[1, 4]).unwrap();
    let mut ex: Vec<u32> = pairs.iter().map(|p| p.exponent).collect();
    ex.sort();
    assert_eq!(ex, [1, 4]);
    assert!(compute::match_by_weights(&s.kappa, &mus, &x, 1, &[9, 9]).is_none());
}

#[test]
fn skeleton_quotients_on_kite_skeleton() {
    let x = fixtures::kite().skeleton(1);
    let zero = Weighting::constant(&x, 0);
    assert_eq!(quotient_homology(&x, &zero, 1).unwrap(), inv(0, &[3, 4, 5]));
    assert!(quotient_homology(&x, &x.weighting(), 1).unwrap().is_zero());
    assert!(quotient_homology(&x, &x.weighting(), 0).unwrap().is_zero());
}

#[test]
fn quotient_matches_theta_cokernel_on_kite() {
    let x = fixtures::kite();
    let zero = Weighting::constant(&x, 0);
    for n in 0..=2 {
        assert_eq!(quotient_homology(&x, &zero, n).unwrap(), theta_cokernel(&x, n).unwrap(), "n = {n}");
    }
    let bad = Weighting::constant(&x, 200);
    assert!(quotient_homology(&x, &bad, 1).is_err());
}

#[test]
fn theta_injectivity_on_fixtures() {
    let rp2 = fixtures::rp2();
    match theta_injectivity(&rp2, 1).unwrap() {
        ThetaVerdict::NotInjective { order, preimage, .. } => {
            assert_eq!(order, 2.into());
            assert_eq!(preimage.len(), rp2.count(2));
        }
        ThetaVerdict::Injective => panic!("projective plane has 2-torsion"),
    }
    assert!(theta_injectivity(&rp2, 0).unwrap().is_injective());
    assert!(theta_injectivity(&rp2, 2).unwrap().is_injective());
    for n in 0..=2 {
        assert!(theta_injectivity(&fixtures::sphere(), n).unwrap().is_injective());
        assert!(theta_injectivity(&fixtures::torus(), n).unwrap().is_injective());
    }
    assert!(theta_injectivity(&fixtures::kite(), 1).unwrap().is_injective());
    let f2 = rp2.with_field(crate::ring::Field::Prime(2));
    assert!(matches!(theta_injectivity(&f2, 1), Err(HomologyError::WrongField(_))));
}

#[test]
fn filtration_on_kite() {
    let x = fixtures::kite();
    let r = weight_filtration_report(&x).unwrap();
    assert!(r.all_hold(), "{:?}", r.checks);
    assert_eq!(r.steps.len(), 3);
    assert_eq!(r.steps[2].invariants[1], inv(1, &[1, 4]));
    let c = x.constant_weight(0);
    let rc = weight_filtration_report(&c).unwrap();
    assert!(rc.all_hold());
    assert!(rc.steps.windows(2).all(|w| w[0].invariants == w[1].invariants));
}

#[test]
fn rendering() {
    assert_eq!(render_invariants(1, &inv(1, &[4, 1])), "H_1^v = R^1 (+) R/(pi^1) (+) R/(pi^4)");
    assert_eq!(render_invariants(2, &inv(0, &[])), "H_2^v = 0");
    let x = fixtures::kite();
    let (_, p) = homology_structure(&x, 1).unwrap();
    let t = render_pairing(&x, &p);
    assert!(t.contains("(AB, ABC, 1)\n(AC, ACD, 4)\nfree: {BC}"), "{t}");
}

#[test]
fn reference_split_agrees_on_fixtures() {
    for (_, x) in fixtures::all() {
        for n in 0..=x.dim().unwrap() {
            let a = kappa_mu_split(&x, n, None).unwrap();
            let b = kappa_mu_split_reference(&x, n, None).unwrap();
            assert_eq!(a.kappa.len(), b.kappa.len());
            assert_spans(&x, n, &b);
        }
    }
}

/// The mu boundaries span the full image over R, not just over the fraction field.
fn assert_spans(x: &WeightedComplex, n: usize, s: &KMuSplit) {
    let d = boundary_matrix(x, n);
    let dm = d.select_columns(&s.mu);
    assert_eq!(smith_normal_form(&dm).exponents, smith_normal_form(&d).exponents);
    assert_eq!(smith_normal_form(&dm).rank(), s.mu.len());
}

fn check_basis_laws(x: &WeightedComplex, n: usize) {
    let s = kappa_mu_split(x, n, None).unwrap();
    let basis = k_basis(x, &s);
    let d = boundary_matrix(x, n);
    let red = reduce_columns(&d);
    let w = x.weights(n);
    let mut gammas = Vec::new();
    for b in &basis {
        let v = b.to_vector(x.field(), x.count(n));
        assert!(d.mul_vec(&v).iter().all(|e| e.is_zero()));
        for (m, c) in &b.coefficients {
            assert!(c.is_monomial());
            assert_eq!(c.valuation(), Valuation::Finite(w[*m] - w[b.kappa]));
        }
        // the transform column of a zero column is the same cycle
        assert_eq!(red.transform.column_dense(b.kappa), v);
        let beta = b.unweighted(x, n);
        let gamma: Vec<_> = beta.iter().map(|e| e.residue()).collect();
        assert!(gamma[b.kappa].is_one());
        gammas.push(gamma);
    }
    assert_eq!(field::rank(&gammas), basis.len());
}

#[test]
fn basis_laws_on_fixtures() {
    for (_, x) in fixtures::all() {
        for n in 0..=x.dim().unwrap() {
            check_basis_laws(&x, n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn structure_equals_direct(seed in any::<u64>()) {
        let x = random_complex(seed, SUITE);
        for n in 0..=x.dim().unwrap() {
            let d = homology_direct(&x, n).unwrap();
            let (s, p) = homology_structure(&x, n).unwrap();
            prop_assert_eq!(&d, &s);
            prop_assert_eq!(d.rank, field_homology_rank(&x, n));
            for e in &p.pairs {
                prop_assert_eq!(e.exponent, x.weights(n)[e.kappa] - x.weights(n + 1)[e.mu]);
            }
        }
    }

    #[test]
    fn basis_laws(seed in any::<u64>()) {
        let x = random_complex(seed, SUITE);
        for n in 0..=x.dim().unwrap() {
            check_basis_laws(&x, n);
        }
    }

    #[test]
    fn skeleton_quotients(seed in any::<u64>()) {
        let x = random_complex(seed, SUITE);
        for n in 0..=x.dim().unwrap() {
            let sk = x.skeleton(n);
            let s = kappa_mu_split(&sk, n, None).unwrap();
            let expected = ModuleInvariants::new(0, s.kappa.iter().map(|&k| sk.weights(n)[k]));
            let zero = Weighting::constant(&sk, 0);
            prop_assert_eq!(quotient_homology(&sk, &zero, n).unwrap(), expected);
        }
    }

    #[test]
    fn quotient_is_theta_cokernel(seed in any::<u64>()) {
        let x = random_complex(seed, RandomParams { max_dim: 2, per_dim: 8, max_weight: 6 });
        let zero = Weighting::constant(&x, 0);
        for n in 0..=x.dim().unwrap() {
            prop_assert_eq!(quotient_homology(&x, &zero, n).unwrap(), theta_cokernel(&x, n).unwrap());
        }
    }

    #[test]
    fn order_invariance(seed in any::<u64>(), o in any::<u64>()) {
        let x = random_complex(seed, SUITE);
        for n in 0..=x.dim().unwrap() {
            let order = random_order(x.count(n), o);
            let a = kappa_mu_split(&x, n, None).unwrap();
            let b = kappa_mu_split(&x, n, Some(&order)).unwrap();
            prop_assert_eq!(a.kappa.len(), b.kappa.len());
            assert_spans(&x, n, &b);
            let r = kappa_mu_split_reference(&x, n, Some(&order)).unwrap();
            prop_assert_eq!(r.kappa.len(), a.kappa.len());
            assert_spans(&x, n, &r);
        }
    }

    #[test]
    fn filtration_identities(seed in any::<u64>()) {
        let x = random_complex(seed, RandomParams { max_dim: 3, per_dim: 8, max_weight: 8 });
        let r = weight_filtration_report(&x).unwrap();
        prop_assert!(r.all_hold(), "{:?}", r.checks);
    }
}
