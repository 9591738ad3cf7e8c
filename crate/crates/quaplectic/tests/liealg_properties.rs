use nalgebra::DMatrix;
use proptest::prelude::*;

use quaplectic::liealg::{
    algebra_from_json, algebra_to_json, builtin_algebra, builtin_entry, central_extensions, contract, fingerprint,
    jacobi_residual, weights_for, ContractionWeights, LieAlgebra, PhaseScaling,
};
use quaplectic::Error;

const SMALL: &[&str] = &[
    "heisenberg1",
    "heisenberg2",
    "su11",
    "hamilton1",
    "poincare11",
    "poincare12",
    "inhom_unitary11",
    "quaplectic11",
    "unitary11",
];

fn near_identity(d: usize) -> impl Strategy<Value = DMatrix<f64>> {
    prop::collection::vec(-1.0f64..1.0, d * d).prop_map(move |v| {
        // Off-identity part has norm below one half, so the change is well conditioned.
        let s = 0.5 / d as f64;
        DMatrix::from_fn(d, d, |i, j| if i == j { 1.0 } else { 0.0 } + s * v[i * d + j])
    })
}

fn algebra_and_basis() -> impl Strategy<Value = (LieAlgebra, DMatrix<f64>)> {
    prop::sample::select(SMALL).prop_flat_map(|name| {
        let l = builtin_algebra(name).unwrap();
        let d = l.dim();
        (Just(l), near_identity(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jacobi_survives_basis_change((l, p) in algebra_and_basis()) {
        let m = l.change_basis(&p).unwrap();
        prop_assert!(jacobi_residual(&m).unwrap() < 1e-10);
    }

    #[test]
    fn h2_is_basis_independent((l, p) in algebra_and_basis()) {
        let before = central_extensions(&l).unwrap();
        let after = central_extensions(&l.change_basis(&p).unwrap()).unwrap();
        prop_assert_eq!(before.h2_dim, after.h2_dim);
        prop_assert!(after.cocycle_residual < 1e-9);
    }

    #[test]
    fn fingerprint_is_basis_independent((l, p) in algebra_and_basis()) {
        prop_assert_eq!(fingerprint(&l.change_basis(&p).unwrap()), fingerprint(&l));
    }

    #[test]
    fn json_round_trip_is_exact((l, p) in algebra_and_basis()) {
        let m = l.change_basis(&p).unwrap();
        let back = algebra_from_json(&algebra_to_json(&m)).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn contraction_is_idempotent(
        name in prop::sample::select(&["unitary11", "unitary12", "quaplectic11", "hamilton1", "poincare11"][..]),
        gc in 0i32..3,
        gb in 0i32..3,
    ) {
        let entry = builtin_entry(name).unwrap();
        let w = weights_for(&entry, PhaseScaling { gamma_c: gc, gamma_b: gb }).unwrap();
        if let Ok(once) = contract(&entry.algebra, &w) {
            prop_assert!(jacobi_residual(&once).unwrap() < 1e-12);
            let twice = contract(&once, &w).unwrap();
            prop_assert_eq!(twice, once);
        }
    }
}

fn contracted(name: &str, scaling: PhaseScaling) -> LieAlgebra {
    let entry = builtin_entry(name).unwrap();
    contract(&entry.algebra, &weights_for(&entry, scaling).unwrap()).unwrap()
}

#[test]
fn b_limit_of_unitary_is_lorentz_with_symmetric_tensors() {
    let c = contracted("unitary13", PhaseScaling::SPECIAL_RELATIVITY);
    let f = fingerprint(&c);
    assert_eq!(f, fingerprint(&builtin_algebra("lorentz_sym2(1,3)").unwrap()));
    assert_eq!(f.dim, 16);
    assert_eq!(f.center, 1);
    assert_eq!(f.killing_signature, (3, 3));
    // Distinct from the uncontracted algebra.
    assert_ne!(f, fingerprint(&builtin_algebra("unitary13").unwrap()));
}

#[test]
fn joint_limit_of_unitary_is_quaplectic_of_space() {
    let c = contracted("unitary13", PhaseScaling::NONRELATIVISTIC);
    let f = fingerprint(&c);
    assert_eq!(f, fingerprint(&builtin_algebra("quaplectic03").unwrap()));
    assert_eq!(f.killing_signature, (0, 9));
}

#[test]
fn hamilton_algebra_sits_inside_the_joint_limit() {
    let c = contracted("unitary13", PhaseScaling::NONRELATIVISTIC);
    let names = ["L01", "L02", "L03", "L12", "L13", "L23", "M00", "M01", "M02", "M03"];
    let idx: Vec<usize> = names.iter().map(|n| c.index_of(n).unwrap()).collect();
    let sub = c.subalgebra(&idx).unwrap();
    let f = fingerprint(&sub);
    assert_eq!(f, fingerprint(&builtin_algebra("hamilton3").unwrap()));
    assert_eq!((f.dim, f.center), (10, 1));
}

#[test]
fn joint_limit_of_su11_is_heisenberg() {
    let c = contracted("su11", PhaseScaling::NONRELATIVISTIC);
    assert_eq!(fingerprint(&c), fingerprint(&builtin_algebra("heisenberg1").unwrap()));
}

#[test]
fn inverted_weights_diverge() {
    let l = builtin_algebra("su11").unwrap();
    let e = contract(&l, &ContractionWeights(vec![0, 0, 3])).unwrap_err();
    assert!(matches!(e, Error::Divergence(ref terms) if !terms.is_empty()));
}
