use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rref};
use crate::rational::{unit_vec, Rational};

/// A linear subspace of `Q^n`, stored as the reduced row-echelon basis so
/// that equality of subspaces is equality of values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_indices(ambient, 0..ambient)
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        let (basis, pivots) = rref(&rows, ambient);
        Subspace { ambient, basis, pivots }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn from_indices(ambient: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        Self::span(ambient, idx.into_iter().map(|i| unit_vec(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the echelon basis.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // a·U = b·W  <=>  [U^T | -W^T] (a, b) = 0
        let (p, q) = (self.dim(), other.dim());
        let rows: Vec<Vec<Rational>> = (0..self.ambient)
            .map(|c| {
                self.basis
                    .iter()
                    .map(|u| u[c].clone())
                    .chain(other.basis.iter().map(|w| -w[c].clone()))
                    .collect()
            })
            .collect();
        let ns = nullspace(&rows, p + q);
        let vecs = ns.into_iter().map(|coef| {
            let mut v = vec![Rational::zero(); self.ambient];
            for (a, u) in coef[..p].iter().zip(&self.basis) {
                for (x, y) in v.iter_mut().zip(u) {
                    *x += a * y;
                }
            }
            v
        });
        Ok(Subspace::span(self.ambient, vecs))
    }

    /// Image under a linear map given as a closure on vectors.
    pub fn map(&self, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().map(|b| f(b)))
    }

    /// True when the two subspaces intersect trivially and `self + other`
    /// has the expected dimension.
    pub fn independent_of(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim() + other.dim())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::LengthMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| rat(a)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, [v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_indices(3, [0, 1]);
        let b = Subspace::from_indices(3, [1, 2]);
        assert_eq!(a.intersection(&b).unwrap(), Subspace::from_indices(3, [1]));
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(3));
        assert!(!a.independent_of(&b).unwrap());
        let c = Subspace::span(3, [v(&[1, 1, 1])]);
        assert!(a.intersection(&c).unwrap().is_zero());
    }

    #[test]
    fn coordinates_in_echelon_basis() {
        let a = Subspace::span(3, [v(&[1, 0, 2]), v(&[0, 1, 3])]);
        assert_eq!(a.coordinates(&v(&[2, -1, 1])), Some(v(&[2, -1])));
        assert_eq!(a.coordinates(&v(&[0, 0, 1])), None);
    }
}
