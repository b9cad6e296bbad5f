use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::VarKind;
use crate::algebra::StarSuperAlgebra;
use crate::error::{Error, Result};
use crate::rational::{format_rational, zero_vec, Rational};

/// A multilinear polynomial: a linear combination of words, each word
/// visiting every slot exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearPoly {
    slot_kinds: Vec<VarKind>,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl MultilinearPoly {
    pub fn new(slot_kinds: Vec<VarKind>) -> Self {
        MultilinearPoly { slot_kinds, terms: BTreeMap::new() }
    }

    /// Adds `coef · word`, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Vec<usize>, coef: Rational) -> Result<()> {
        let n = self.slot_kinds.len();
        let mut seen = vec![false; n];
        if word.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: word.len() });
        }
        for &s in &word {
            if s >= n || seen[s] {
                return Err(Error::InvalidParameter(format!(
                    "word {word:?} does not visit each slot once"
                )));
            }
            seen[s] = true;
        }
        let entry = self.terms.entry(word.clone()).or_insert_with(Rational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
        Ok(())
    }

    pub fn slot_kinds(&self) -> &[VarKind] {
        &self.slot_kinds
    }

    pub fn num_slots(&self) -> usize {
        self.slot_kinds.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: &[usize]) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Renames slots `a` and `b` in every word.
    pub fn swap_slots(&self, a: usize, b: usize) -> MultilinearPoly {
        let mut kinds = self.slot_kinds.clone();
        kinds.swap(a, b);
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let w = w
                    .iter()
                    .map(|&s| if s == a { b } else if s == b { a } else { s })
                    .collect();
                (w, c.clone())
            })
            .collect();
        MultilinearPoly { slot_kinds: kinds, terms }
    }

    pub fn neg(&self) -> MultilinearPoly {
        MultilinearPoly {
            slot_kinds: self.slot_kinds.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let word: Vec<String> =
                w.iter().map(|&s| format!("{}{}", self.slot_kinds[s].symbol(), s + 1)).collect();
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{} ", format_rational(&mag))?;
            }
            f.write_str(&word.join("·"))?;
        }
        Ok(())
    }
}

/// Evaluates `p` with slot `s` replaced by `assignment[s]`.
pub fn evaluate(
    alg: &StarSuperAlgebra,
    p: &MultilinearPoly,
    assignment: &[Vec<Rational>],
) -> Result<Vec<Rational>> {
    if assignment.len() != p.num_slots() {
        return Err(Error::LengthMismatch { expected: p.num_slots(), got: assignment.len() });
    }
    let d = alg.dim();
    if let Some(v) = assignment.iter().find(|v| v.len() != d) {
        return Err(Error::LengthMismatch { expected: d, got: v.len() });
    }
    let mut out = zero_vec(d);
    for (word, coef) in p.terms() {
        let mut acc = assignment[word[0]].clone();
        for &s in &word[1..] {
            acc = alg.mul(&acc, &assignment[s]);
        }
        for (o, a) in out.iter_mut().zip(acc) {
            *o += coef * a;
        }
    }
    Ok(out)
}
