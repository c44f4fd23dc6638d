//! Integer partitions: enumeration in the fixed class order (largest-first,
//! i.e. reverse-lexicographic), hook lengths, and padding for stable
//! sequences.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The padded shape (n - |λ|, λ₁, λ₂, …) of size n, if it is a valid
    /// partition (first row long enough), else None. This is V(λ)ₙ's shape.
    pub fn pad_to(&self, n: usize) -> Option<Partition> {
        let tail = self.size();
        if n < tail {
            return None;
        }
        let head = n - tail;
        if self.0.first().is_some_and(|&first| head < first) {
            return None;
        }
        if head == 0 {
            return if self.is_empty() {
                Some(Partition::empty())
            } else {
                None
            };
        }
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(head);
        parts.extend_from_slice(&self.0);
        Some(Partition::new(parts))
    }

    /// Inverse of `pad_to`: drop the first row.
    pub fn unpad(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Dimension of the irreducible 𝔖ₙ-representation of this shape
    /// (hook length formula).
    pub fn irrep_dim(&self) -> u64 {
        let n = self.size();
        if n == 0 {
            return 1;
        }
        let lam = &self.0;
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in lam.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.0[j] - i) - 1;
                hooks *= hook as u128;
            }
        }
        let fact: u128 = (1..=n as u128).product();
        u64::try_from(fact / hooks).expect("irrep dimension overflow")
    }

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Partition::empty();
        };
        let parts = (0..first)
            .map(|j| self.0.iter().filter(|&&r| r > j).count())
            .collect();
        Partition(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All partitions of n, largest-first (reverse-lexicographic): the fixed
/// conjugacy-class order used everywhere, including serialization.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        let hi = remaining.min(max);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Size of the conjugacy class with the given cycle type in 𝔖ₙ.
pub fn class_size(cycle_type: &Partition) -> u64 {
    let n = cycle_type.size();
    let mut centralizer: u128 = 1;
    let mut mult = std::collections::HashMap::new();
    for &c in cycle_type.parts() {
        *mult.entry(c).or_insert(0u128) += 1;
    }
    for (c, m) in mult {
        centralizer *= (c as u128).pow(m as u32);
        centralizer *= (1..=m).product::<u128>();
    }
    let fact: u128 = (1..=n as u128).product();
    u64::try_from(fact / centralizer).expect("class size overflow")
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Multinomial coefficient n! / (μ₁! μ₂! ⋯) for a composition of n.
pub fn multinomial(mu: &[usize]) -> u64 {
    let n: usize = mu.iter().sum();
    let mut num: u128 = (1..=n as u128).product();
    for &p in mu {
        num /= (1..=p as u128).product::<u128>();
    }
    u64::try_from(num).expect("multinomial overflow")
}
