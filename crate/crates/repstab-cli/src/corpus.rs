//! Built-in module corpus: free modules, permutation tensor powers, Burau
//! specializations, and the pure-braid twisted-homology pipelines.

use num::BigRational;
use num_traits::One;
use repstab_core::braid::{burau_ubr_module, trivial_ubr_module, BurauVariant, UBrModule};
use repstab_core::exactlin::{Field, Matrix};
use repstab_core::figmod::{free_module, FIModule};
use repstab_core::grouphom::sn_action_and_assemble;
use repstab_core::symgrp::SymRep;

use crate::cache::Cache;

pub fn field_tag(field: Field) -> String {
    match field {
        Field::Q => "q".to_string(),
        Field::Fp(p) => format!("p{p}"),
    }
}

/// Kronecker product, with the left factor indexing the coarse blocks.
fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, a.field, |r, c| {
        let mut v = a.get(r / b.rows, c / b.cols);
        v *= &b.get(r % b.rows, c % b.cols);
        v
    })
}

/// Rankwise tensor product of two towers on the same truncation window.
pub fn tensor_product(a: &FIModule, b: &FIModule) -> FIModule {
    assert_eq!(a.n_max, b.n_max);
    let reps: Vec<SymRep> = (0..=a.n_max)
        .map(|n| {
            let gens = (0..n.saturating_sub(1))
                .map(|i| kron(&a.reps[n].gens[i], &b.reps[n].gens[i]))
                .collect();
            SymRep::new(n, a.dim(n) * b.dim(n), gens).expect("tensor product action")
        })
        .collect();
    let transitions = (0..a.n_max)
        .map(|n| kron(&a.transitions[n], &b.transitions[n]))
        .collect();
    FIModule::new(reps, transitions).expect("tensor product module")
}

/// A corpus member together with the largest rank at which we run the
/// factorial-sized homology computations on it.
pub struct CorpusEntry {
    pub name: &'static str,
    pub cap: usize,
    pub module: FIModule,
}

const SYMMETRIC_ENTRIES: &[(&str, usize)] = &[
    ("m0", 7),
    ("m1", 7),
    ("m2", 7),
    ("m3", 6),
    ("m1xm1", 6),
];

pub fn symmetric_corpus(n_max: usize, field: Field, cache: &Cache) -> Vec<CorpusEntry> {
    SYMMETRIC_ENTRIES
        .iter()
        .map(|&(name, cap)| {
            let cap = cap.min(n_max);
            CorpusEntry {
                name,
                cap,
                module: builtin_module(name, cap, field, cache).expect("built-in corpus entry"),
            }
        })
        .collect()
}

pub fn builtin_names() -> Vec<&'static str> {
    vec!["m0", "m1", "m2", "m3", "m1xm1", "pbr-h0-trivial", "pbr-h1-trivial", "pbr-h0-burau", "pbr-h1-burau"]
}

/// Construct a named built-in FI-module at the given truncation, through the
/// disk cache.
pub fn builtin_module(
    name: &str,
    n_max: usize,
    field: Field,
    cache: &Cache,
) -> Result<FIModule, String> {
    let desc = format!("module/{name}/n{n_max}/{}", field_tag(field));
    let build = || -> Result<FIModule, String> {
        match name {
            "m0" => Ok(free_module(0, n_max, field)),
            "m1" => Ok(free_module(1, n_max, field)),
            "m2" => Ok(free_module(2, n_max, field)),
            "m3" => Ok(free_module(3, n_max, field)),
            "m1xm1" => {
                let m1 = free_module(1, n_max, field);
                Ok(tensor_product(&m1, &m1))
            }
            "pbr-h0-trivial" => pbr_homology("trivial", 0, n_max, field, cache),
            "pbr-h1-trivial" => pbr_homology("trivial", 1, n_max, field, cache),
            "pbr-h0-burau" => pbr_homology("burau-neg1", 0, n_max, field, cache),
            "pbr-h1-burau" => pbr_homology("burau-neg1", 1, n_max, field, cache),
            other => Err(format!("unknown built-in module {other:?}")),
        }
    };
    match cache.load(&desc) {
        Some(bytes) => match serde_json::from_slice::<FIModule>(&bytes) {
            Ok(m) => Ok(m),
            Err(e) => {
                eprintln!("warning: discarding corrupt cache entry for {desc:?}: {e}");
                let m = build()?;
                cache.store(&desc, &serde_json::to_vec(&m).unwrap());
                Ok(m)
            }
        },
        None => {
            let m = build()?;
            cache.store(&desc, &serde_json::to_vec(&m).unwrap());
            Ok(m)
        }
    }
}

/// Named braid-module coefficients for the pure-braid pipelines.
pub fn coefficient_module(name: &str, n_max: usize, field: Field) -> Result<UBrModule, String> {
    let minus_one = -BigRational::one();
    match name {
        "trivial" => Ok(trivial_ubr_module(n_max, field)),
        "burau-neg1" => burau_ubr_module(n_max, &minus_one, BurauVariant::Unreduced, field)
            .map_err(|e| e.to_string()),
        "burau-reduced-neg1" => burau_ubr_module(n_max, &minus_one, BurauVariant::Reduced, field)
            .map_err(|e| e.to_string()),
        other => Err(format!("unknown coefficient system {other:?}")),
    }
}

/// H_i(PBr; A) as an FI-module, for i ∈ {0, 1}, through the disk cache.
pub fn pbr_homology(
    coeff: &str,
    degree: usize,
    n_max: usize,
    field: Field,
    cache: &Cache,
) -> Result<FIModule, String> {
    let desc = format!("pbrh/{coeff}/h{degree}/n{n_max}/{}", field_tag(field));
    if let Some(bytes) = cache.load(&desc) {
        match serde_json::from_slice::<FIModule>(&bytes) {
            Ok(m) => return Ok(m),
            Err(e) => {
                eprintln!("warning: discarding corrupt cache entry for {desc:?}: {e}");
            }
        }
    }
    let m = coefficient_module(coeff, n_max, field)?;
    let h = sn_action_and_assemble(&m, degree).map_err(|e| e.to_string())?;
    cache.store(&desc, &serde_json::to_vec(&h).unwrap());
    Ok(h)
}
