use proptest::prelude::*;
use repstab_core::exactlin::{q, qq, rank_dense, ChainComplex, Field, Matrix, Scalar};

fn m(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Matrix {
    let t: Vec<(usize, usize, Scalar)> =
        entries.iter().map(|(r, c, v)| (*r, *c, q(*v))).collect();
    Matrix::from_triples(rows, cols, Field::Q, &t)
}

#[test]
fn rank_identity() {
    let id = Matrix::identity(3, Field::Q);
    let rd = id.rank_and_bases();
    assert_eq!(rd.rank, 3);
    assert_eq!(rd.kernel.cols, 0);
    assert_eq!(rd.image.cols, 3);
}

#[test]
fn rank_zero_matrix() {
    let z = Matrix::zero(2, 5, Field::Q);
    let rd = z.rank_and_bases();
    assert_eq!(rd.rank, 0);
    assert_eq!(rd.kernel.cols, 5);
}

#[test]
fn rank_proportional_rows() {
    let a = m(2, 3, &[(0, 0, 1), (0, 1, 2), (0, 2, 3), (1, 0, 2), (1, 1, 4), (1, 2, 6)]);
    assert_eq!(a.rank(), 1);
    assert_eq!(rank_dense(&a), 1);
}

#[test]
fn kernel_is_in_nullspace() {
    let a = m(3, 4, &[(0, 0, 1), (0, 1, 2), (1, 1, 1), (1, 2, 1), (2, 3, 5), (0, 3, 1)]);
    let rd = a.rank_and_bases();
    assert_eq!(rd.rank + rd.kernel.cols, a.cols);
    assert!(a.mul(&rd.kernel).is_zero_matrix());
    assert_eq!(rd.image.rank(), rd.rank);
}

#[test]
fn solve_and_inverse() {
    let a = m(2, 2, &[(0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
    let inv = a.inverse().unwrap();
    assert_eq!(a.mul(&inv), Matrix::identity(2, Field::Q));
    assert_eq!(inv.get(0, 0), q(1));
    assert_eq!(inv.get(0, 1), q(-1));

    // Inconsistent system has no solution.
    let b = m(2, 1, &[(0, 0, 1)]);
    let sing = m(2, 1, &[(0, 0, 1), (1, 0, 1)]);
    assert!(sing.solve(&b).is_none());
}

#[test]
fn prime_field_arithmetic() {
    let f = Field::Fp(7);
    let a = f.from_i64(3);
    let b = f.from_i64(5);
    assert_eq!(&a + &b, f.from_i64(1));
    assert_eq!(&a * &b, f.from_i64(1));
    assert_eq!(a.inv(), f.from_i64(5));
    assert_eq!(f.from_i64(-1), f.from_i64(6));
}

#[test]
fn scalar_serialization_round_trip() {
    let s = qq(-3, 4);
    assert_eq!(s.to_string(), "-3/4");
    let json = serde_json::to_string(&s).unwrap();
    assert_eq!(json, "\"-3/4\"");
    let back: Scalar = serde_json::from_str(&json).unwrap();
    assert_eq!(back, s);
    assert_eq!(q(5).to_string(), "5");
}

#[test]
fn matrix_serialization_round_trip() {
    let a = m(3, 2, &[(0, 0, 1), (2, 1, -7)]);
    let json = serde_json::to_string(&a).unwrap();
    let back: Matrix = serde_json::from_str(&json).unwrap();
    assert_eq!(back, a);
    assert!(json.contains("[0,0,\"1\"]"));
}

#[test]
fn complex_rejects_bad_square() {
    let d1 = Matrix::identity(1, Field::Q);
    let d2 = Matrix::identity(1, Field::Q);
    assert!(ChainComplex::new(0, vec![1, 1, 1], vec![d1, d2]).is_err());
}

#[test]
fn homology_single_space() {
    let c = ChainComplex::new(0, vec![1], vec![]).unwrap();
    assert_eq!(c.homology_dims(), vec![(0, 1)]);
}

#[test]
fn homology_identity_map() {
    let c = ChainComplex::new(0, vec![1, 1], vec![Matrix::identity(1, Field::Q)]).unwrap();
    assert_eq!(c.homology_dims(), vec![(0, 0), (1, 0)]);
}

#[test]
fn homology_circle() {
    // Reduced simplicial chains of the boundary of a triangle, with the
    // augmentation to degree -1: H̃₀ = 0, H̃₁ = 1.
    let aug = m(1, 3, &[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
    // Edges 01, 02, 12 with ∂(uv) = v - u.
    let d1 = m(
        3,
        3,
        &[(0, 0, -1), (1, 0, 1), (0, 1, -1), (2, 1, 1), (1, 2, -1), (2, 2, 1)],
    );
    let c = ChainComplex::new(-1, vec![1, 3, 3], vec![aug, d1]).unwrap();
    assert_eq!(c.homology_dim_at(-1), 0);
    assert_eq!(c.homology_dim_at(0), 0);
    assert_eq!(c.homology_dim_at(1), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_transpose_and_dense(entries in proptest::collection::vec(
        (0usize..6, 0usize..7, -4i64..=4), 0..24)) {
        let a = m(6, 7, &entries.iter().map(|(r, c, v)| (*r, *c, *v)).collect::<Vec<_>>());
        let r = a.rank();
        prop_assert_eq!(r, a.transpose().rank());
        prop_assert_eq!(r, rank_dense(&a));
        let rd = a.rank_and_bases();
        prop_assert_eq!(rd.rank, r);
        prop_assert!(a.mul(&rd.kernel).is_zero_matrix());
        prop_assert_eq!(rd.image.rank(), r);
    }

    #[test]
    fn rank_invariant_under_basis_change(entries in proptest::collection::vec(
        (0usize..5, 0usize..5, -3i64..=3), 0..15),
        perm in 0usize..120) {
        // Multiply by a permutation matrix (a cheap invertible basis change).
        let a = m(5, 5, &entries.iter().map(|(r, c, v)| (*r, *c, *v)).collect::<Vec<_>>());
        let mut order: Vec<usize> = (0..5).collect();
        let mut k = perm;
        for i in (1..5).rev() {
            order.swap(i, k % (i + 1));
            k /= i + 1;
        }
        let p = Matrix::from_fn(5, 5, Field::Q, |r, c| {
            if order[c] == r { q(1) } else { q(0) }
        });
        prop_assert_eq!(a.rank(), p.mul(&a).rank());
        prop_assert_eq!(a.rank(), a.mul(&p).rank());
    }
}
