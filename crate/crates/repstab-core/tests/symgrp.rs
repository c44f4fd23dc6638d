use std::collections::HashMap;

use repstab_core::exactlin::{q, Field};
use repstab_core::symgrp::{
    character_of, character_tools, class_size, factorial, induce, mn_character, multinomial,
    partitions, permutation_rep, regular_rep, sign_rep, trivial_rep, ums_detect, PadRule,
    Partition, Permutation, SymRep, young_transversal,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

#[test]
fn permutation_basics() {
    let s1 = Permutation::adjacent(3, 0);
    let s2 = Permutation::adjacent(3, 1);
    let c = s1.compose(&s2); // s1 ∘ s2: 0→0→1, 1→2→2, 2→1→0... check cycle type
    assert_eq!(c.cycle_type(), vec![3]);
    assert_eq!(c.compose(&c.inverse()), Permutation::identity(3));
    assert_eq!(s1.sign(), -1);
    assert_eq!(c.sign(), 1);
}

#[test]
fn adjacent_word_reconstructs() {
    for images in [vec![2, 0, 3, 1], vec![3, 2, 1, 0], vec![0, 1, 2, 3]] {
        let perm = Permutation::from_images(images);
        let mut acc = Permutation::identity(4);
        for i in perm.adjacent_word() {
            acc = Permutation::adjacent(4, i).compose(&acc);
        }
        assert_eq!(acc, perm);
    }
}

#[test]
fn partition_order_is_largest_first() {
    let ps = partitions(3);
    assert_eq!(ps, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    assert_eq!(partitions(7).len(), 15);
}

#[test]
fn class_sizes_sum_to_group_order() {
    for n in 1..=7 {
        let total: u64 = partitions(n).iter().map(class_size).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn hook_length_dims() {
    assert_eq!(p(&[2, 1]).irrep_dim(), 2);
    assert_eq!(p(&[4, 1]).irrep_dim(), 4);
    assert_eq!(p(&[3, 2]).irrep_dim(), 5);
    assert_eq!(Partition::empty().irrep_dim(), 1);
    // Sum of squares = n!.
    for n in 1..=7usize {
        let sum: u64 = partitions(n).iter().map(|l| l.irrep_dim().pow(2)).sum();
        assert_eq!(sum, factorial(n));
    }
}

#[test]
fn mn_characters_orthonormal() {
    // ⟨χ_λ, χ_μ⟩ = δ_λμ for all |λ|,|μ| ≤ 7 (per n).
    for n in 0..=7usize {
        let ps = partitions(n);
        for a in &ps {
            for b in &ps {
                let dot: i64 = ps
                    .iter()
                    .map(|mu| {
                        class_size(mu) as i64 * mn_character(a, mu) * mn_character(b, mu)
                    })
                    .sum();
                let expected = if a == b { factorial(n) as i64 } else { 0 };
                assert_eq!(dot, expected, "lambda={a:?} mu={b:?} n={n}");
            }
        }
    }
}

#[test]
fn transversal_counts() {
    assert_eq!(young_transversal(2, &[1, 1]).unwrap().len(), 2);
    assert_eq!(young_transversal(3, &[2, 1]).unwrap().len(), 3);
    assert_eq!(young_transversal(4, &[2, 2]).unwrap().len(), 6);
    assert!(young_transversal(4, &[2, 1]).is_err());
    // Lexicographic order and minimality: each rep increasing on blocks.
    let t = young_transversal(4, &[2, 2]).unwrap();
    for rep in &t {
        let ol = rep.one_line();
        assert!(ol[0] < ol[1] && ol[2] < ol[3]);
    }
    assert!(t.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn induce_trivial_from_s2_to_s3() {
    let v = induce(3, &[2, 1], &[trivial_rep(2, Field::Q), trivial_rep(1, Field::Q)]).unwrap();
    assert_eq!(v.dim, 3);
    let chi = character_of(&v);
    // Classes (3), (2,1), (1,1,1) largest-first: fixed points 0, 1, 3.
    assert_eq!(chi.values, vec![q(0), q(1), q(3)]);
}

#[test]
fn induce_regular_of_s2() {
    let v = induce(2, &[1, 1], &[trivial_rep(1, Field::Q), trivial_rep(1, Field::Q)]).unwrap();
    assert_eq!(v.dim, 2);
    let (_, mults) = character_tools(&v).unwrap();
    assert_eq!(mults.get(&p(&[2])), Some(&1));
    assert_eq!(mults.get(&p(&[1, 1])), Some(&1));
}

#[test]
fn induce_identity_case() {
    let v = permutation_rep(3, Field::Q);
    let w = induce(3, &[3], &[v.clone()]).unwrap();
    assert_eq!(w.dim, v.dim);
    assert_eq!(character_of(&w), character_of(&v));
}

#[test]
fn induce_dim_formula() {
    for (n, mu) in [(4, vec![2, 2]), (5, vec![2, 2, 1]), (5, vec![0, 3, 2])] {
        let factors: Vec<SymRep> = mu.iter().map(|&m| permutation_rep(m, Field::Q)).collect();
        let v = induce(n, &mu, &factors).unwrap();
        let expected =
            multinomial(&mu) as usize * factors.iter().map(|f| f.dim).product::<usize>();
        assert_eq!(v.dim, expected);
        v.check_coxeter().unwrap();
    }
}

#[test]
fn character_tools_standard_cases() {
    let (_, triv) = character_tools(&trivial_rep(5, Field::Q)).unwrap();
    assert_eq!(triv, HashMap::from([(p(&[5]), 1)]));

    let (_, reg) = character_tools(&regular_rep(3, Field::Q)).unwrap();
    assert_eq!(
        reg,
        HashMap::from([(p(&[3]), 1), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 1)])
    );

    let (_, perm) = character_tools(&permutation_rep(6, Field::Q)).unwrap();
    assert_eq!(perm, HashMap::from([(p(&[6]), 1), (p(&[5, 1]), 1)]));
}

#[test]
fn restrict_follows_pieri() {
    // Res of the permutation rep of S_4: permutation rep of S_3 ⊕ trivial.
    let v = permutation_rep(4, Field::Q).restrict();
    let (_, mults) = character_tools(&v).unwrap();
    assert_eq!(
        mults,
        HashMap::from([(p(&[3]), 2), (p(&[2, 1]), 1)])
    );

    // Res σ_(n) = σ_(n-1).
    let t = trivial_rep(5, Field::Q).restrict();
    let (_, m) = character_tools(&t).unwrap();
    assert_eq!(m, HashMap::from([(p(&[4]), 1)]));

    // Res σ_(2,1) from S_3 to S_2 = trivial ⊕ sign. The (2,1) irreducible is
    // the complement of the trivial inside the permutation rep; its
    // restriction has character (2, 0) = triv + sign.
    let s3 = permutation_rep(3, Field::Q);
    let r = s3.restrict();
    let (_, m2) = character_tools(&r).unwrap();
    // perm rep of S_3 restricted = σ_(2) ⊕ σ_(2) ⊕ σ_(1,1): contains sign once.
    assert_eq!(m2, HashMap::from([(p(&[2]), 2), (p(&[1, 1]), 1)]));
}

#[test]
fn pieri_branching_rule_on_general_input() {
    // mult_μ(Res V) = Σ over λ ⊢ n with μ = λ minus one box of mult_λ(V),
    // for an induced module with mixed factors.
    let v = induce(
        5,
        &[3, 2],
        &[permutation_rep(3, Field::Q), sign_rep(2, Field::Q)],
    )
    .unwrap();
    let (_, mults) = character_tools(&v).unwrap();
    let (_, res_mults) = character_tools(&v.restrict()).unwrap();
    let mut predicted: HashMap<Partition, u64> = HashMap::new();
    for (lambda, m) in &mults {
        // remove one box in every legal way
        let parts = lambda.parts();
        for i in 0..parts.len() {
            if parts[i] >= 1 && (i + 1 == parts.len() || parts[i] > parts[i + 1]) {
                let mut q: Vec<usize> = parts.to_vec();
                q[i] -= 1;
                let q: Vec<usize> = q.into_iter().filter(|&x| x > 0).collect();
                *predicted.entry(Partition::new(q)).or_insert(0) += m;
            }
        }
    }
    predicted.retain(|_, m| *m > 0);
    assert_eq!(res_mults, predicted);
}

#[test]
fn ums_constant_trivial() {
    let seq: Vec<SymRep> = (0..=5).map(|n| trivial_rep(n, Field::Q)).collect();
    let rep = ums_detect(&seq, 0, PadRule::FirstRow).unwrap();
    assert!(rep.stable);
    assert_eq!(rep.onset, 0);
    assert_eq!(rep.c, vec![(Partition::empty(), 1)]);
}

#[test]
fn ums_sign_not_stable() {
    let seq: Vec<SymRep> = (2..=6).map(|n| sign_rep(n, Field::Q)).collect();
    let rep = ums_detect(&seq, 2, PadRule::FirstRow).unwrap();
    assert!(!rep.stable);
}

#[test]
fn ums_permutation_reps() {
    // ℚⁿ is V(∅) ⊕ V((1)) from n = 2 on; at n = 1 the (1) label is not yet
    // realizable... (1).pad_to(1) = (1) exists but head 0 < 1 fails, so onset 2.
    let seq: Vec<SymRep> = (1..=6).map(|n| permutation_rep(n, Field::Q)).collect();
    let rep = ums_detect(&seq, 1, PadRule::FirstRow).unwrap();
    assert!(rep.stable);
    assert_eq!(rep.onset, 2);
    assert_eq!(rep.c, vec![(Partition::empty(), 1), (p(&[1]), 1)]);
}
