use num::BigRational;
use num_traits::One;
use repstab_core::braid::{
    br_generation_degree, burau_ubr_module, check_braid_relations, pure_generator_word,
    reduced_burau, reduced_burau_generic, restrict_to_pure, unreduced_burau_generic, BraidWord,
    BurauVariant, Laurent, LaurentMatrix, UBrModule,
};
use repstab_core::exactlin::{Field, Matrix};
use repstab_core::figmod::{polynomial_degree, PolyDegree};

fn minus_one() -> BigRational {
    -BigRational::one()
}

#[test]
fn reduced_burau_rank_two_is_minus_t() {
    let gens = reduced_burau(2).unwrap();
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0].rows, 1);
    assert_eq!(*gens[0].at(0, 0), Laurent::monomial(1, minus_one()));
}

#[test]
fn burau_relations_at_generic_t() {
    for n in 2..=5 {
        reduced_burau(n).unwrap();
        check_braid_relations(&unreduced_burau_generic(n)).unwrap();
    }
}

#[test]
fn burau_specializations() {
    // t = 1: symmetric-group degeneration (checked inside reduced_burau, and
    // directly for the unreduced family).
    let one = BigRational::one();
    for g in unreduced_burau_generic(4) {
        let m = g.eval(&one, Field::Q);
        assert_eq!(m.mul(&m), Matrix::identity(4, Field::Q));
    }
    // t = -1: integral matrices.
    for g in unreduced_burau_generic(5) {
        let m = g.eval(&minus_one(), Field::Q);
        for r in 0..m.rows {
            for c in 0..m.cols {
                if let repstab_core::exactlin::Scalar::Rat(v) = m.get(r, c) {
                    assert!(v.denom().is_one());
                }
            }
        }
    }
}

#[test]
fn laurent_matrix_inverse_and_serde() {
    for g in reduced_burau_generic(4) {
        let inv = g.inverse_unit().unwrap();
        assert_eq!(g.mul(&inv), LaurentMatrix::identity(3));
    }
    let l = Laurent::monomial(-2, minus_one());
    let l = &l + &Laurent::t();
    let js = serde_json::to_string(&l).unwrap();
    assert_eq!(js, r#"{"-2":"-1","1":"1"}"#);
    let back: Laurent = serde_json::from_str(&js).unwrap();
    assert_eq!(back, l);
}

#[test]
fn braid_word_reduction_and_evaluation() {
    let w = BraidWord::new(3, vec![1, 2, -2, -1, 1]);
    assert_eq!(w.letters, vec![1]);
    let gens: Vec<Matrix> = unreduced_burau_generic(3)
        .iter()
        .map(|g| g.eval(&minus_one(), Field::Q))
        .collect();
    let invs: Vec<Matrix> = gens.iter().map(|g| g.inverse().unwrap()).collect();
    assert_eq!(w.evaluate(&gens, &invs), gens[0]);
}

#[test]
fn burau_module_shapes_and_intertwining() {
    let red = burau_ubr_module(5, &minus_one(), BurauVariant::Reduced, Field::Q).unwrap();
    assert_eq!(red.dims(), vec![0, 0, 1, 2, 3, 4]);
    let unred = burau_ubr_module(5, &minus_one(), BurauVariant::Unreduced, Field::Q).unwrap();
    assert_eq!(unred.dims(), vec![0, 1, 2, 3, 4, 5]);
    // validate() runs in the constructor; failure would have errored.
}

#[test]
fn unreduced_burau_is_polynomial_of_degree_one() {
    let m = burau_ubr_module(5, &minus_one(), BurauVariant::Unreduced, Field::Q).unwrap();
    let rep = polynomial_degree(&m, -1);
    assert_eq!(rep.degree, PolyDegree::Degree(1));
}

#[test]
fn reduced_burau_degree_certifiable_only_past_rank_two() {
    let m = burau_ubr_module(6, &minus_one(), BurauVariant::Reduced, Field::Q).unwrap();
    // In all ranks the recursion cannot settle within the window...
    assert_ne!(polynomial_degree(&m, -1).degree, PolyDegree::Degree(1));
    // ...but past rank 2 the family is certifiably of degree 1.
    assert_eq!(polynomial_degree(&m, 2).degree, PolyDegree::Degree(1));
}

#[test]
fn generation_degrees() {
    let unred = burau_ubr_module(5, &minus_one(), BurauVariant::Unreduced, Field::Q).unwrap();
    let rep = br_generation_degree(&unred).unwrap();
    assert!(rep.generation <= Some(1), "{:?}", rep.codims);
    assert!(!rep.is_lower_bound);

    let red = burau_ubr_module(5, &minus_one(), BurauVariant::Reduced, Field::Q).unwrap();
    let rep = br_generation_degree(&red).unwrap();
    assert_eq!(rep.generation, Some(2));

    // Trivial 1-dimensional module: generated at rank 0.
    let triv = UBrModule {
        n_max: 3,
        gens: (0..=3usize)
            .map(|n| vec![Matrix::identity(1, Field::Q); n.saturating_sub(1)])
            .collect(),
        transitions: vec![Matrix::identity(1, Field::Q); 3],
    };
    triv.validate().unwrap();
    assert_eq!(br_generation_degree(&triv).unwrap().generation, Some(0));

    // Zero module: nothing to generate.
    let zero = UBrModule {
        n_max: 2,
        gens: (0..=2usize)
            .map(|n| vec![Matrix::zero(0, 0, Field::Q); n.saturating_sub(1)])
            .collect(),
        transitions: vec![Matrix::zero(0, 0, Field::Q); 2],
    };
    assert_eq!(br_generation_degree(&zero).unwrap().generation, None);
}

#[test]
fn pure_braid_generator_matrices() {
    let two: Vec<Matrix> = unreduced_burau_generic(2)
        .iter()
        .map(|g| g.eval(&minus_one(), Field::Q))
        .collect();
    let a = restrict_to_pure(&two, 2).unwrap();
    assert_eq!(a[&(1, 2)], two[0].mul(&two[0]));

    let three: Vec<Matrix> = unreduced_burau_generic(3)
        .iter()
        .map(|g| g.eval(&minus_one(), Field::Q))
        .collect();
    let a = restrict_to_pure(&three, 3).unwrap();
    let s2i = three[1].inverse().unwrap();
    let expect = three[1].mul(&three[0]).mul(&three[0]).mul(&s2i);
    assert_eq!(a[&(1, 3)], expect);
    for m in a.values() {
        assert!(m.inverse().is_ok());
    }
    // Word shape sanity.
    assert_eq!(pure_generator_word(4, 1, 3).letters, vec![2, 1, 1, -2]);
}
