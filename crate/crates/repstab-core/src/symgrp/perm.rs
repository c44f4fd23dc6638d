//! Permutations in one-line notation (0-based internally, 1-based in
//! serialized form).

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// images[i] = image of letter i.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Permutation {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            assert!(x < n && !seen[x], "not a permutation: {images:?}");
            seen[x] = true;
        }
        Permutation { images }
    }

    /// Adjacent transposition s_i = (i, i+1), 0-based: swaps letters i, i+1.
    pub fn adjacent(n: usize, i: usize) -> Permutation {
        assert!(i + 1 < n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle type as a weakly decreasing partition of n.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// Factorization into adjacent transpositions, in application order:
    /// self = s_{w[last]} ∘ … ∘ s_{w[0]}.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut q = self.images.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..q.len().saturating_sub(1)).find(|&i| q[i] > q[i + 1]) else {
                break;
            };
            // Right-multiplying by s_i swaps positions i, i+1.
            q.swap(i, i + 1);
            word.push(i);
        }
        word
    }

    pub fn sign(&self) -> i64 {
        if self.adjacent_word().len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<usize> = self.images.iter().map(|x| x + 1).collect();
        write!(f, "{v:?}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<usize> = self.images.iter().map(|x| x + 1).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        for &x in &v {
            if x == 0 || x > v.len() {
                return Err(serde::de::Error::custom("one-line entries are 1-based"));
            }
        }
        Ok(Permutation::from_images(v.iter().map(|x| x - 1).collect()))
    }
}
