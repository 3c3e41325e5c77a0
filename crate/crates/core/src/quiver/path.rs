use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ArrowId, Quiver};

/// Noncommutative polynomial in the arrows: words with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PathPoly {
    terms: BTreeMap<Vec<ArrowId>, BigInt>,
}

impl PathPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, word: Vec<ArrowId>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(word).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<ArrowId>, i64)>>(terms: I) -> Self {
        let mut p = PathPoly::zero();
        for (w, c) in terms {
            p.add_term(w, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<ArrowId>, &BigInt)> {
        self.terms.iter()
    }

    pub fn neg(&self) -> PathPoly {
        PathPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// Drop every word that contains one of `zero_arrows`.
    pub fn specialize_zero(&self, zero_arrows: &[ArrowId]) -> PathPoly {
        PathPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| !w.iter().any(|a| zero_arrows.contains(a)))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Equal to `other` or to `-other`.
    pub fn equal_up_to_sign(&self, other: &PathPoly) -> bool {
        self == other || *self == other.neg()
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let word = if w.is_empty() { "1".to_string() } else { q.render_word(w) };
            if abs.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("{abs} {word}"));
            }
        }
        out
    }
}
