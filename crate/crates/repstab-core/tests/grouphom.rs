use num::BigRational;
use num_traits::One;
use repstab_core::braid::{burau_ubr_module, trivial_ubr_module, BurauVariant};
use repstab_core::exactlin::{Field, Matrix};
use repstab_core::figmod::constant_module;
use repstab_core::grouphom::{
    fox_derivative, pbr_presentation, pure_gens, sn_action_and_assemble,
    validate_conjugation_table, FoxComplex, GroupPresentation,
};
use repstab_core::symgrp::{character_of, multiplicities, Partition};

fn q() -> Field {
    Field::Q
}

#[test]
fn fox_derivative_axioms() {
    // x = 1, y = 2
    let d = fox_derivative(&[1], 1);
    assert_eq!(d.terms.len(), 1);
    assert_eq!(d.terms[&vec![]], 1);
    assert!(fox_derivative(&[2], 1).is_zero());
    let d = fox_derivative(&[-1], 1);
    assert_eq!(d.terms[&vec![-1]], -1);
    // commutator [x, y] = x y x^-1 y^-1: derivative wrt x is 1 - x y x^-1.
    let d = fox_derivative(&[1, 2, -1, -2], 1);
    assert_eq!(d.terms.len(), 2);
    assert_eq!(d.terms[&vec![]], 1);
    assert_eq!(d.terms[&vec![1, 2, -1]], -1);
}

#[test]
fn circle_homology() {
    let pres = GroupPresentation::new(vec!["x".into()], vec![]);
    let fx = FoxComplex::new(pres.clone(), vec![Matrix::identity(1, q())], 1, q()).unwrap();
    let th = fx.twisted_h0_h1().unwrap();
    assert_eq!((th.h0, th.h1), (1, 1));

    let two = Matrix::from_fn(1, 1, q(), |_, _| q().from_i64(2));
    let fx = FoxComplex::new(pres, vec![two], 1, q()).unwrap();
    let th = fx.twisted_h0_h1().unwrap();
    assert_eq!((th.h0, th.h1), (0, 0));
}

#[test]
fn relator_violation_is_reported() {
    let pres = GroupPresentation::new(vec!["x".into()], vec![vec![1, 1]]);
    let two = Matrix::from_fn(1, 1, q(), |_, _| q().from_i64(2));
    assert!(FoxComplex::new(pres, vec![two], 1, q()).is_err());
}

#[test]
fn pure_braid_presentation_shape() {
    assert!(pbr_presentation(1).generators.is_empty());
    let p2 = pbr_presentation(2);
    assert_eq!(p2.generators.len(), 1);
    assert!(p2.relators.is_empty());
    assert_eq!(pbr_presentation(3).relators.len(), 2);
    assert_eq!(pbr_presentation(4).relators.len(), 11);
    assert_eq!(pure_gens(5).len(), 10);
}

#[test]
fn pure_braid_untwisted_homology() {
    // H0 = Q and H1 = Q^{C(n,2)} with trivial coefficients.
    for n in 1..=6usize {
        let pres = pbr_presentation(n);
        let rho = vec![Matrix::identity(1, q()); pres.generators.len()];
        let fx = FoxComplex::new(pres, rho, 1, q()).unwrap();
        let th = fx.twisted_h0_h1().unwrap();
        assert_eq!(th.h0, 1, "H0 at n={n}");
        assert_eq!(th.h1, n * (n - 1) / 2, "H1 at n={n}");
    }
}

#[test]
fn conjugation_table_matches_matrices() {
    for n in 2..=5 {
        validate_conjugation_table(n).unwrap();
    }
}

#[test]
fn trivial_coefficients_assemble_to_constant_module() {
    let m = trivial_ubr_module(5, q());
    let h0 = sn_action_and_assemble(&m, 0).unwrap();
    let expect = constant_module(5, q());
    assert_eq!(h0.dims(), expect.dims());
    for n in 0..=5 {
        assert_eq!(h0.reps[n].gens, expect.reps[n].gens, "action at rank {n}");
    }
    for n in 0..5 {
        assert_eq!(h0.transitions[n], expect.transitions[n]);
    }
}

#[test]
fn first_homology_with_trivial_coefficients() {
    let m = trivial_ubr_module(5, q());
    let h1 = sn_action_and_assemble(&m, 1).unwrap();
    let dims: Vec<usize> = (0..=5usize).map(|n| n * n.saturating_sub(1) / 2).collect();
    assert_eq!(h1.dims(), dims);
    // Decomposition at n >= 4: trivial + standard + the (n-2, 2) constituent,
    // each with multiplicity one.
    for n in 4..=5usize {
        let chi = character_of(&h1.reps[n]);
        let mult = multiplicities(&chi).unwrap();
        let expected = [
            Partition::new(vec![n]),
            Partition::new(vec![n - 1, 1]),
            Partition::new(vec![n - 2, 2]),
        ];
        for lam in &expected {
            assert_eq!(mult.get(lam), Some(&1), "multiplicity of {lam:?} at n={n}");
        }
        let total: u64 = mult.values().sum();
        assert_eq!(total, 3, "exactly three constituents at n={n}");
    }
}

#[test]
fn burau_twisted_homology_dims() {
    let t = -BigRational::one();
    let m = burau_ubr_module(5, &t, BurauVariant::Unreduced, Field::Q).unwrap();
    let h0 = sn_action_and_assemble(&m, 0).unwrap();
    assert_eq!(h0.dims(), vec![0, 1, 1, 1, 1, 1]);
    let h1 = sn_action_and_assemble(&m, 1).unwrap();
    assert_eq!(h1.dims(), vec![0, 0, 1, 3, 6, 10]);
}

#[test]
fn reduced_burau_twisted_homology_dims() {
    let t = -BigRational::one();
    let m = burau_ubr_module(5, &t, BurauVariant::Reduced, Field::Q).unwrap();
    let h0 = sn_action_and_assemble(&m, 0).unwrap();
    let h1 = sn_action_and_assemble(&m, 1).unwrap();
    assert_eq!(h0.dims()[3..], [0, 0, 0]);
    assert_eq!(h1.dims()[3..], [0, 3, 0]);
}

#[test]
fn presentation_serializes_as_word_lists() {
    let p = pbr_presentation(3);
    let js = serde_json::to_string(&p).unwrap();
    let back: GroupPresentation = serde_json::from_str(&js).unwrap();
    assert_eq!(back, p);
    assert!(js.contains("\"relators\""));
}
