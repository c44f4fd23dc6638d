use repstab_core::exactlin::{Field, Matrix};
use repstab_core::figmod::{
    constant_module, free_module, ker_coker, polynomial_degree, quotient_basis, shift,
    zero_module, FIModule, PolyDegree, U1Module,
};
use repstab_core::symgrp::{character_of, sign_rep, trivial_rep, SymRep};

fn falling(n: usize, m: usize) -> usize {
    (n - m + 1..=n).product()
}

#[test]
fn free_module_dims_and_validity() {
    for m in 0..=2 {
        let a = free_module(m, 5, Field::Q);
        let report = a.validate();
        assert!(report.valid, "M({m}): {:?}", report.violations);
        for n in 0..=5 {
            let expect = if n >= m { falling(n, m) } else { 0 };
            assert_eq!(a.dim(n), expect, "M({m}) rank {n}");
        }
    }
}

#[test]
fn fi_morphism_functoriality() {
    let a = free_module(2, 5, Field::Q);
    // Identity injection is the identity matrix.
    let id3 = a.fi_morphism(&[0, 1, 2], 3);
    assert_eq!(id3, Matrix::identity(a.dim(3), Field::Q));
    // A(f∘g) = A(f)∘A(g) for g: [2]→[3], f: [3]→[5].
    let g = [2usize, 0];
    let f = [1usize, 4, 2];
    let fg: Vec<usize> = g.iter().map(|&i| f[i]).collect();
    let lhs = a.fi_morphism(&fg, 5);
    let rhs = a.fi_morphism(&f, 5).mul(&a.fi_morphism(&g, 3));
    assert_eq!(lhs, rhs);
}

#[test]
fn fi_morphism_transition_is_prepend() {
    let a = free_module(1, 4, Field::Q);
    // prepend: [n] → [n+1], i ↦ i+1.
    for n in 1..4 {
        let f: Vec<usize> = (1..=n).collect();
        assert_eq!(a.fi_morphism(&f, n + 1), a.transitions[n]);
    }
}

#[test]
fn shift_of_free_module() {
    let a = free_module(1, 6, Field::Q);
    let sa = shift(&a, 1);
    assert!(sa.validate().valid, "{:?}", sa.validate().violations);
    // (ΣM(1))_n = M(1)_{n+1}: dimension n+1, and as a representation it is
    // the natural permutation module plus a trivial summand.
    for n in 2..=5 {
        assert_eq!(sa.dim(n), n + 1);
        let ch = character_of(&sa.reps[n]);
        let m1 = character_of(&a.reps[n]);
        let m0 = character_of(&trivial_rep(n, Field::Q));
        let sum: Vec<_> = m1
            .values
            .iter()
            .zip(&m0.values)
            .map(|(x, y)| x.clone() + y.clone())
            .collect();
        assert_eq!(ch.values, sum, "rank {n}");
    }
}

#[test]
fn double_shift_matches_iterated_shift() {
    let a = free_module(2, 6, Field::Q);
    let s2 = shift(&a, 2);
    let s11 = shift(&shift(&a, 1), 1);
    assert_eq!(s2.dims(), s11.dims());
    assert_eq!(s2.transitions, s11.transitions);
    for n in 0..=4 {
        assert_eq!(s2.reps[n].gens, s11.reps[n].gens, "rank {n}");
    }
}

#[test]
fn quotient_basis_is_a_splitting() {
    let t = Matrix::from_triples(
        4,
        2,
        Field::Q,
        &[
            (0, 0, Field::Q.from_i64(1)),
            (2, 0, Field::Q.from_i64(2)),
            (1, 1, Field::Q.from_i64(3)),
        ],
    );
    let (e, p) = quotient_basis(&t);
    assert_eq!(e.cols, 2);
    assert_eq!(p.mul(&e), Matrix::identity(2, Field::Q));
    assert!(p.mul(&t).is_zero_matrix());
}

#[test]
fn ker_coker_of_free_module() {
    let a = free_module(1, 5, Field::Q);
    let (ker, coker) = ker_coker(&a);
    assert!(ker.is_zero(), "M(1) has injective transitions");
    // coker(M(1) → ΣM(1)) is the constant module.
    assert_eq!(coker.dims(), vec![1; 5]);
    assert!(coker.validate().valid, "{:?}", coker.validate().violations);
    for t in &coker.transitions {
        assert!(!t.is_zero_matrix(), "constant quotient must have nonzero transitions");
    }
}

#[test]
fn polynomial_degree_of_free_modules() {
    for m in 0..=2 {
        let a = free_module(m, 6, Field::Q);
        let rep = polynomial_degree(&a, -1);
        assert_eq!(rep.degree, PolyDegree::Degree(m as u32), "M({m})");
    }
}

#[test]
fn polynomial_degree_edge_cases() {
    let z = zero_module(4, Field::Q);
    assert_eq!(polynomial_degree(&z, -1).degree, PolyDegree::NegInfinity);

    let a = free_module(1, 6, Field::Q);
    assert_eq!(polynomial_degree(&a, 7).degree, PolyDegree::ExceedsTruncation);

    // Shifting preserves the degree.
    let sa = shift(&a, 1);
    assert_eq!(polynomial_degree(&sa, -1).degree, PolyDegree::Degree(1));

    // Direct sums take the max of the degrees.
    let sum = free_module(1, 6, Field::Q).direct_sum(&constant_module(6, Field::Q));
    assert_eq!(polynomial_degree(&sum, -1).degree, PolyDegree::Degree(1));
}

#[test]
fn kernel_obstruction_is_detected() {
    // Trivial representations with zero transitions: every transition has a
    // full kernel, so no polynomial degree exists at any offset below n_max.
    let reps: Vec<SymRep> = (0..=4).map(|n| trivial_rep(n, Field::Q)).collect();
    let transitions = (0..4).map(|_| Matrix::zero(1, 1, Field::Q)).collect();
    let a = FIModule::new(reps, transitions).unwrap();
    let rep = polynomial_degree(&a, 0);
    assert_eq!(rep.degree, PolyDegree::NotPolynomial);
    assert_eq!(rep.kernel_witness, Some(1));
}

#[test]
fn u1_tower_degrees() {
    // Constant 1-dimensional tower: degree 0.
    let c = U1Module {
        n_max: 5,
        dims: vec![1; 6],
        transitions: vec![Matrix::identity(1, Field::Q); 5],
    };
    assert_eq!(polynomial_degree(&c, -1).degree, PolyDegree::Degree(0));

    // Forgetting the action does not change the degree of a free module:
    // the plain recursion on the underlying tower can only overestimate,
    // and for the constant module both agree.
    let m0 = constant_module(5, Field::Q).underlying_u1();
    assert_eq!(polynomial_degree(&m0, -1).degree, PolyDegree::Degree(0));
}

#[test]
fn validate_requires_double_transition_invariance() {
    // Sign representations with identity transitions satisfy single-step
    // equivariance (both sides flip sign), but the two-step composite is not
    // invariant under swapping the two new letters. Only the second-order
    // check catches this.
    let reps: Vec<SymRep> = (0..=3).map(|n| sign_rep(n, Field::Q)).collect();
    let transitions: Vec<Matrix> = (0..3).map(|_| Matrix::identity(1, Field::Q)).collect();
    let m = FIModule::new_unchecked(reps, transitions);
    let report = m.validate();
    assert!(!report.valid);
    assert!(report
        .violations
        .iter()
        .any(|v| v.what.contains("double transition")));
}

#[test]
fn validate_reports_equivariance_failures_with_rank() {
    let mut a = free_module(1, 3, Field::Q);
    // Replace a transition with a same-shape map that is not equivariant.
    a.transitions[1] = Matrix::from_triples(2, 1, Field::Q, &[(0, 0, Field::Q.from_i64(1))]);
    let report = a.validate();
    assert!(!report.valid);
    assert!(report.violations.iter().any(|v| v.rank == 1));
}

#[test]
fn json_round_trip() {
    let a = free_module(2, 4, Field::Q);
    let js = serde_json::to_string(&a).unwrap();
    let back: FIModule = serde_json::from_str(&js).unwrap();
    assert_eq!(back.dims(), a.dims());
    assert_eq!(back.transitions, a.transitions);
    for n in 0..=4 {
        assert_eq!(back.reps[n].gens, a.reps[n].gens);
    }
    // Schema sanity: the expected top-level keys are present.
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    for key in ["n_max", "ranks", "generators", "transitions"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn json_rejects_malformed_generators() {
    let a = free_module(1, 3, Field::Q);
    let mut v: serde_json::Value = serde_json::to_value(&a).unwrap();
    v["generators"]["3"] = serde_json::json!([]);
    let res: Result<FIModule, _> = serde_json::from_value(v);
    assert!(res.is_err());
}
