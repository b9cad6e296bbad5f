//! Structure constants converted into a working arithmetic for fast
//! repeated evaluation.

use crate::algebra::StarSuperAlgebra;
use crate::arith::Arith;

/// Sparse multiplication table over `A::Elem`.
#[derive(Debug, Clone)]
pub struct LoweredTable<E> {
    dim: usize,
    /// `rows[i]` lists `(j, k, c)` with a nonzero `c` in `e_i e_j`.
    rows: Vec<Vec<(usize, usize, E)>>,
}

/// Matrix of right multiplication by a fixed vector `v`:
/// `e_i v = Σ_k c e_k` for `(k, c)` in `rows[i]`.
#[derive(Debug, Clone)]
pub struct RightMap<E> {
    rows: Vec<Vec<(usize, E)>>,
}

impl<E: Clone> LoweredTable<E> {
    /// `None` if some constant cannot be represented in `ar`.
    pub fn new<A: Arith<Elem = E>>(alg: &StarSuperAlgebra, ar: &A) -> Option<Self> {
        let d = alg.dim();
        let mut rows = vec![Vec::new(); d];
        for (i, j, k, c) in alg.structure_entries() {
            let c = ar.lift(&c)?;
            if !ar.is_zero(&c) {
                rows[i].push((j, k, c));
            }
        }
        Some(LoweredTable { dim: d, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul<A: Arith<Elem = E>>(&self, ar: &A, u: &[E], v: &[E]) -> Vec<E> {
        let mut out = ar.zeros(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ar.is_zero(ui) {
                continue;
            }
            for (j, k, c) in &self.rows[i] {
                if ar.is_zero(&v[*j]) {
                    continue;
                }
                let t = ar.mul(ui, &v[*j]);
                ar.add_mul(&mut out[*k], &t, c);
            }
        }
        out
    }

    pub fn right_map<A: Arith<Elem = E>>(&self, ar: &A, v: &[E]) -> RightMap<E> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: Vec<(usize, E)> = Vec::new();
                for (j, k, c) in row {
                    if ar.is_zero(&v[*j]) {
                        continue;
                    }
                    let t = ar.mul(&v[*j], c);
                    match acc.iter_mut().find(|(kk, _)| kk == k) {
                        Some((_, x)) => ar.add_assign(x, &t),
                        None => acc.push((*k, t)),
                    }
                }
                acc.retain(|(_, x)| !ar.is_zero(x));
                acc
            })
            .collect();
        RightMap { rows }
    }
}

impl<E: Clone> RightMap<E> {
    /// `u v`.
    pub fn apply<A: Arith<Elem = E>>(&self, ar: &A, u: &[E]) -> Vec<E> {
        let mut out = ar.zeros(self.rows.len());
        self.apply_add(ar, u, &mut out);
        out
    }

    /// `out += u v`.
    pub fn apply_add<A: Arith<Elem = E>>(&self, ar: &A, u: &[E], out: &mut [E]) {
        for (i, ui) in u.iter().enumerate() {
            if ar.is_zero(ui) {
                continue;
            }
            for (k, c) in &self.rows[i] {
                ar.add_mul(&mut out[*k], ui, c);
            }
        }
    }

    /// `out += s · (u v)`.
    pub fn apply_add_scaled<A: Arith<Elem = E>>(&self, ar: &A, s: &E, u: &[E], out: &mut [E]) {
        for (i, ui) in u.iter().enumerate() {
            if ar.is_zero(ui) {
                continue;
            }
            let t = ar.mul(s, ui);
            for (k, c) in &self.rows[i] {
                ar.add_mul(&mut out[*k], &t, c);
            }
        }
    }
}
