//! Words in a finitely generated group and group-ring elements.
//!
//! A word is a sequence of nonzero signed 1-based generator indices; `-g`
//! denotes the inverse of generator `g`. Words are kept freely reduced.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A freely reduced word over signed generator indices.
pub type Word = Vec<i64>;

/// Freely reduce a word (cancel adjacent `g, -g` pairs).
pub fn reduce_word(w: &[i64]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        assert!(l != 0, "word letters are nonzero signed indices");
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// The inverse word.
pub fn invert_word(w: &[i64]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Reduced concatenation.
pub fn concat_words(a: &[i64], b: &[i64]) -> Word {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    reduce_word(&v)
}

/// A group given by generators and freely reduced relator words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> GroupPresentation {
        let p = GroupPresentation {
            generators,
            relators: relators.iter().map(|r| reduce_word(r)).collect(),
        };
        p.validate();
        p
    }

    pub fn validate(&self) {
        let mut seen = std::collections::BTreeSet::new();
        for g in &self.generators {
            assert!(seen.insert(g), "duplicate generator name {g}");
        }
        let s = self.generators.len() as i64;
        for r in &self.relators {
            assert_eq!(r, &reduce_word(r), "relator not freely reduced");
            for &l in r {
                assert!(l != 0 && l.unsigned_abs() as i64 <= s, "letter out of range");
            }
        }
    }
}

/// A finite formal integer combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    pub terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn add_term(&mut self, w: Word, c: i64) {
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Free differential of a reduced word with respect to generator `x`
/// (1-based): ∂x/∂x = 1, ∂y/∂x = 0 for y ≠ x, ∂x⁻¹/∂x = −x⁻¹, and
/// ∂(uv)/∂x = ∂u/∂x + u·∂v/∂x.
pub fn fox_derivative(w: &[i64], x: usize) -> GroupRingElement {
    let g = x as i64;
    let mut out = GroupRingElement::default();
    let mut prefix: Word = Vec::new();
    for &l in w {
        if l.abs() == g {
            if l > 0 {
                out.add_term(prefix.clone(), 1);
            } else {
                out.add_term(concat_words(&prefix, &[-g]), -1);
            }
        }
        prefix = concat_words(&prefix, &[l]);
    }
    out
}
