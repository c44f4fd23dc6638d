use repstab_core::exactlin::Field;
use repstab_core::figmod::{constant_module, free_module, zero_module};
use repstab_core::homalg::{
    central_homology, consistency_checks, degrees, splitting_homology, tor0_dim, tor_dims,
    tor_dims_checked, unit_module, SstCache, TorMethod,
};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn unit_tor_is_delta() {
    // Tor_q of the trivial module against itself is 1-dimensional exactly
    // when q equals the rank.
    let cache = SstCache::new(Field::Q);
    for n in 0..=6 {
        let unit = unit_module(n, Field::Q);
        let dims = tor_dims(&unit, n, TorMethod::Bar, &cache).unwrap();
        for (q, d) in dims.iter().enumerate() {
            assert_eq!(*d, usize::from(q == n), "n={n} q={q}");
        }
    }
}

#[test]
fn free_module_tor_vanishes_above_zero() {
    let cache = SstCache::new(Field::Q);
    for m in 0..=2usize {
        let a = free_module(m, 5, Field::Q);
        for n in 0..=5 {
            let dims = tor_dims_checked(&a, n, &cache).unwrap();
            let expect0 = if n == m { factorial(m) } else { 0 };
            assert_eq!(dims[0], expect0, "M({m}) Tor0 at n={n}");
            assert!(
                dims[1..].iter().all(|&d| d == 0),
                "M({m}) higher Tor at n={n}: {dims:?}"
            );
        }
    }
}

#[test]
fn tor0_direct_route_matches_bar() {
    let cache = SstCache::new(Field::Q);
    for m in 0..=2usize {
        let a = free_module(m, 5, Field::Q);
        for n in 0..=5 {
            let bar = tor_dims(&a, n, TorMethod::Bar, &cache).unwrap();
            assert_eq!(bar[0], tor0_dim(&a, n), "M({m}) n={n}");
        }
    }
}

#[test]
fn splitting_homology_concentrated_at_top() {
    let cache = SstCache::new(Field::Q);
    // n = 1: empty complex, but the Steinberg piece exists with dim 1.
    let (dims, sst1) = splitting_homology(1, &cache).unwrap();
    assert!(dims.is_empty());
    assert_eq!(sst1.dim, 1);
    for n in 2..=6 {
        let (dims, sst) = splitting_homology(n, &cache).unwrap();
        assert_eq!(dims.len(), n - 1);
        for (i, d) in dims.iter().enumerate() {
            assert_eq!(*d, usize::from(i == n - 2), "n={n} i={i}");
        }
        assert_eq!(sst.dim, 1, "n={n}");
        assert!(sst.check_coxeter().is_ok(), "n={n}");
    }
}

#[test]
fn second_split_steinberg_is_the_sign_representation() {
    let cache = SstCache::new(Field::Q);
    let sst2 = cache.get(2);
    assert_eq!(sst2.dim, 1);
    let g = &sst2.gens[0];
    assert_eq!(g.get(0, 0), -Field::Q.one());
}

#[test]
fn central_homology_of_constant_module() {
    // For the rank-0 free module the complex is the complex of injective
    // words: reduced homology concentrated at the top, with dimension the
    // number of derangements.
    let derangements = [1usize, 0, 1, 2, 9];
    for n in 2..=4usize {
        let a = constant_module(n, Field::Q);
        let h = central_homology(&a, n).unwrap();
        for (i, d) in &h {
            let expect = if *i == (n as i64) - 1 {
                derangements[n]
            } else {
                0
            };
            assert_eq!(*d, expect, "n={n} i={i}");
        }
    }
}

#[test]
fn central_homology_vanishing_window() {
    // H̃ᵢ = 0 whenever n > i+1, for the constant module up to rank 6.
    for n in 1..=6usize {
        let a = constant_module(n, Field::Q);
        let h = central_homology(&a, n).unwrap();
        for (i, d) in &h {
            if (n as i64) > i + 1 {
                assert_eq!(*d, 0, "n={n} i={i}");
            }
        }
    }
}

#[test]
fn central_homology_of_zero_module() {
    let z = zero_module(4, Field::Q);
    let h = central_homology(&z, 4).unwrap();
    assert!(h.iter().all(|(_, d)| *d == 0));
}

#[test]
fn degrees_of_basic_modules() {
    let c = constant_module(5, Field::Q);
    let r = degrees(&c);
    assert_eq!(r.generation, Some(0));
    assert_eq!(r.presentation, Some(0));
    assert!(!r.generation_is_lower_bound);

    let m2 = free_module(2, 5, Field::Q);
    let r = degrees(&m2);
    assert_eq!(r.generation, Some(2));
    assert_eq!(r.presentation, Some(2));

    let z = zero_module(4, Field::Q);
    let r = degrees(&z);
    assert_eq!(r.generation, None);
    assert_eq!(r.presentation, None);
}

#[test]
fn consistency_checks_pass_for_free_module() {
    let cache = SstCache::new(Field::Q);
    let a = free_module(1, 4, Field::Q);
    let report = consistency_checks(&a, 4, &cache).unwrap();
    assert!(
        report.pass,
        "{:?}",
        report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .collect::<Vec<_>>()
    );
    assert_eq!(report.checks.len(), 5);
}

#[test]
fn coherence_envelope_admits_derangement_classes_of_constant_module() {
    // M(0) is generated and presented in degree 0, yet its central homology
    // carries derangement classes exactly at n = i + 1. The envelope's middle
    // term is clamped to 1, so these classes must not be flagged.
    let cache = SstCache::new(Field::Q);
    for n in 2..=5 {
        let a = free_module(0, n, Field::Q);
        let report = consistency_checks(&a, n, &cache).unwrap();
        let envelope = report
            .checks
            .iter()
            .find(|c| c.id == "coherence-envelope")
            .unwrap();
        assert!(envelope.pass, "rank {n}: {:?}", envelope.witnesses);
        // The classes really are there: top homology is the derangement
        // number, nonzero from n = 2 on.
        let top = central_homology(&a, n).unwrap();
        let (_, dim) = top.last().unwrap();
        assert!(*dim > 0, "rank {n} top central homology vanished");
    }
}

#[test]
fn consistency_checks_pass_vacuously_for_zero() {
    let cache = SstCache::new(Field::Q);
    let z = zero_module(4, Field::Q);
    let report = consistency_checks(&z, 4, &cache).unwrap();
    assert!(report.pass);
}

#[test]
fn bar_and_koszul_agree_on_shifted_modules() {
    // A non-free test case: the shift of M(1) (permutation modules with a
    // trivial summand).
    let cache = SstCache::new(Field::Q);
    let a = repstab_core::figmod::shift(&free_module(1, 6, Field::Q), 1);
    for n in 0..=5 {
        tor_dims_checked(&a, n, &cache).unwrap();
    }
}
