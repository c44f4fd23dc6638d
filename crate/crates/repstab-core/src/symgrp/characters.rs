//! Characters of symmetric groups: irreducible characters by the
//! Murnaghan–Nakayama recursion, character vectors of explicit matrix
//! representations, and multiplicity extraction by inner products.

use std::collections::HashMap;

use super::partition::{class_size, factorial, partitions, Partition};
use super::perm::Permutation;
use super::rep::SymRep;
use super::SymError;
use crate::exactlin::{q, qq, Scalar};
use serde::{Deserialize, Serialize};

/// One scalar per conjugacy class of 𝔖ₙ, classes in the fixed
/// largest-first partition order of `partitions(n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterVector {
    pub n: usize,
    pub values: Vec<Scalar>,
}

impl CharacterVector {
    pub fn dim(&self) -> &Scalar {
        // The identity class (1ⁿ) is last in largest-first order.
        self.values.last().expect("empty character")
    }
}

/// Irreducible character value χ_λ on the class of cycle type μ, by the
/// Murnaghan–Nakayama border-strip recursion in beta-number form.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "character size mismatch");
    let mut memo = HashMap::new();
    mn_rec(lambda.parts().to_vec(), mu.parts(), &mut memo)
}

fn mn_rec(
    lambda: Vec<usize>,
    mu_rest: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), i64>,
) -> i64 {
    if mu_rest.is_empty() {
        debug_assert!(lambda.is_empty());
        return 1;
    }
    let key = (lambda.clone(), mu_rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let t = mu_rest[0];
    // Beta numbers: λ_i + (k-1-i), all distinct.
    let k = lambda.len();
    let betas: Vec<usize> = lambda.iter().enumerate().map(|(i, &l)| l + (k - 1 - i)).collect();
    let mut total = 0i64;
    for (idx, &b) in betas.iter().enumerate() {
        if b < t || betas.contains(&(b - t)) {
            continue;
        }
        // Height of the strip = number of beta values strictly between b-t and b.
        let height = betas.iter().filter(|&&x| x > b - t && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut nb = betas.clone();
        nb[idx] = b - t;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        // Convert back to a partition: subtract the staircase, drop zeros.
        let new_lambda: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (k - 1 - i))
            .filter(|&x| x > 0)
            .collect();
        total += sign * mn_rec(new_lambda, &mu_rest[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// A representative permutation with the given cycle type, cycles on
/// consecutive letters.
pub fn class_representative(mu: &Partition) -> Permutation {
    let n = mu.size();
    let mut images: Vec<usize> = (0..n).collect();
    let mut offset = 0;
    for &len in mu.parts() {
        for j in 0..len {
            images[offset + j] = offset + (j + 1) % len;
        }
        offset += len;
    }
    Permutation::from_images(images)
}

/// The character of an explicit matrix representation, as traces on class
/// representatives.
pub fn character_of(rep: &SymRep) -> CharacterVector {
    let values = partitions(rep.n)
        .iter()
        .map(|mu| SymRep::trace(&rep.apply_perm(&class_representative(mu))))
        .collect();
    CharacterVector { n: rep.n, values }
}

/// Irreducible multiplicities ⟨char, χ_λ⟩ from a character vector.
/// Errors if an inner product is not a nonnegative integer (which means the
/// input was not a genuine character).
pub fn multiplicities(chi: &CharacterVector) -> Result<HashMap<Partition, u64>, SymError> {
    let n = chi.n;
    let classes = partitions(n);
    assert_eq!(chi.values.len(), classes.len(), "character length mismatch");
    let order = factorial(n);
    let mut mults = HashMap::new();
    for lambda in &classes {
        let mut acc = q(0);
        for (mu, value) in classes.iter().zip(&chi.values) {
            let weight = q(class_size(mu) as i64 * mn_character(lambda, mu));
            acc += &(&weight * value);
        }
        let inner = &acc * &qq(1, order as i64);
        let m = match &inner {
            Scalar::Rat(r) if r.is_integer() && *r.numer() >= 0.into() => {
                u64::try_from(r.numer().clone()).expect("multiplicity overflow")
            }
            _ => {
                return Err(SymError::NotACharacter(format!(
                    "inner product with chi_{lambda:?} is {inner}"
                )))
            }
        };
        if m > 0 {
            mults.insert(lambda.clone(), m);
        }
    }
    Ok(mults)
}

/// character_tools of the public API: character plus multiplicities.
pub fn character_tools(
    rep: &SymRep,
) -> Result<(CharacterVector, HashMap<Partition, u64>), SymError> {
    rep.check_coxeter()?;
    let chi = character_of(rep);
    let mults = multiplicities(&chi)?;
    // Dimension bookkeeping: Σ c_λ dim σ_λ = dim V.
    let total: u64 = mults.iter().map(|(l, c)| c * l.irrep_dim()).sum();
    if total != rep.dim as u64 {
        return Err(SymError::NotACharacter(format!(
            "multiplicities account for dimension {total}, representation has {}",
            rep.dim
        )));
    }
    Ok((chi, mults))
}
