//! Exact linear algebra over the rationals, plus prime-field counterparts
//! used as independent cross-checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{mulmod, ModPrime};
use crate::error::{Error, Result};
use crate::rational::{primitive_integer_vec, Rational};

/// Exact rank of a rational matrix by fraction-free (Bareiss) elimination.
pub fn matrix_rank(m: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| primitive_integer_vec(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    bareiss_rank(&mut rows)
}

/// Rank of an integer matrix, destroying the input.
pub fn bareiss_rank(rows: &mut [Vec<BigInt>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            for c in (col + 1)..ncols {
                let v = &row[c] * &prow[col] - &prow[c] * &row[col];
                // Bareiss: the division is exact.
                row[c] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank modulo a prime. Fails if some denominator vanishes modulo `p`.
pub fn rank_mod_p(m: &[Vec<Rational>], p: u64) -> Result<usize> {
    let f = ModPrime::new(p);
    let mut acc = ModpRank::new(p);
    for row in m {
        let lifted: Option<Vec<u64>> = row.iter().map(|r| crate::arith::Arith::lift(&f, r)).collect();
        let lifted = lifted.ok_or_else(|| {
            Error::InvalidParameter(format!("a denominator is divisible by {p}"))
        })?;
        acc.insert(lifted);
    }
    Ok(acc.rank())
}

/// Incremental exact rank: vectors are inserted one at a time and kept as
/// primitive integer rows with distinct leading columns.
#[derive(Debug, Clone)]
pub struct ExactRank {
    len: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl ExactRank {
    pub fn new(len: usize) -> Self {
        ExactRank { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    /// Inserts a vector; returns true if it increased the rank.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        debug_assert_eq!(v.len(), self.len);
        for (lead, row) in &self.rows {
            if v[*lead].is_zero() {
                continue;
            }
            let a = row[*lead].clone();
            let b = v[*lead].clone();
            let g = a.gcd(&b);
            let (a, b) = (a / &g, b / &g);
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x * &a - r * &b;
            }
            normalize(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(lead) => {
                let pos = self.rows.partition_point(|(l, _)| *l < lead);
                self.rows.insert(pos, (lead, v));
                true
            }
            None => false,
        }
    }

    pub fn insert_i128(&mut self, v: &[i128]) -> bool {
        self.insert(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

fn normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Incremental rank over `F_p`.
#[derive(Debug, Clone)]
pub struct ModpRank {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModpRank {
    pub fn new(p: u64) -> Self {
        ModpRank { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (lead, row) in &self.rows {
            let c = v[*lead];
            if c == 0 {
                continue;
            }
            // rows are normalised to a leading 1
            for (x, r) in v.iter_mut().zip(row) {
                *x = (*x + p - mulmod(c, *r, p)) % p;
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(lead) => {
                let inv = ModPrime::new(p).inv(v[lead]).expect("nonzero residue");
                for x in v.iter_mut() {
                    *x = mulmod(*x, inv, p);
                }
                let pos = self.rows.partition_point(|(l, _)| *l < lead);
                self.rows.insert(pos, (lead, v));
                true
            }
            None => false,
        }
    }
}

/// Reduced row-echelon form. Returns the nonzero rows and their pivot
/// columns.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{x : M x = 0}` for a matrix given by rows of length `ncols`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                x[pc] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// One solution of `M x = b`, if any.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let aug: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// Absolute value helper used by reports.
pub fn max_abs(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(matrix_rank(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
        assert_eq!(matrix_rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(matrix_rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(matrix_rank(&[vec![ratio(1, 2), ratio(1, 3)], vec![rat(3), rat(2)]]), 1);
    }

    #[test]
    fn incremental_matches_bareiss() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0], &[1, 3, 4, 4], &[5, 0, 0, 1]]);
        let mut acc = ExactRank::new(4);
        for r in &a {
            acc.insert(primitive_integer_vec(r));
        }
        assert_eq!(acc.rank(), matrix_rank(&a));
        assert_eq!(acc.rank(), 3);
        assert_eq!(rank_mod_p(&a, 2_147_483_647).unwrap(), 3);
    }

    #[test]
    fn nullspace_and_solve() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns, vec![vec![rat(-1), rat(1), rat(0)]]);
        let x = solve(&a, &[rat(2), rat(5)], 3).unwrap();
        assert_eq!(x, vec![rat(2), rat(0), rat(5)]);
        assert!(solve(&m(&[&[0, 0]]), &[rat(1)], 2).is_none());
    }
}
