use std::collections::BTreeMap;

use rayon::prelude::*;

use super::bases::EvalBases;
use super::AnalysisConfig;
use crate::algebra::StarSuperAlgebra;
use crate::arith::{Arith, Integers, ModPrime, Rationals};
use crate::error::{Error, Result};
use crate::linalg::{ExactRank, ModpRank};
use crate::lowered::LoweredTable;
use crate::polynomials::VarKind;
use crate::rational::{primitive_integer_vec, Rational};

/// Graded codimension of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimReport {
    pub n: usize,
    pub value: u128,
    /// Rank for each kind content `(n₁, n₂, n₃, n₄)` (counts of
    /// `Y⁺, Y⁻, Z⁺, Z⁻`), in lexicographic order.
    pub per_kind_ranks: BTreeMap<[usize; 4], usize>,
}

/// A codimension report with its `n`-th root.
#[derive(Debug, Clone, PartialEq)]
pub struct CodimRow {
    pub report: CodimReport,
    pub root: f64,
}

/// All `(n₁, n₂, n₃, n₄)` with sum `n`, lexicographically.
pub fn kind_contents(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                out.push([a, b, c, n - a - b - c]);
            }
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn multinomial(c: &[usize; 4]) -> u128 {
    factorial(c.iter().sum()) / c.iter().map(|&k| factorial(k)).product::<u128>()
}

/// The sorted kind vector of a content.
fn canonical_kinds(c: &[usize; 4]) -> Vec<VarKind> {
    VarKind::GRADED
        .iter()
        .zip(c)
        .flat_map(|(&k, &count)| std::iter::repeat_n(k, count))
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 0..n {
            if !cur.contains(&a) {
                cur.push(a);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

fn check_caps(n: usize, tuples: u128, cfg: &AnalysisConfig) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    if n > cfg.cap_n {
        return Err(Error::CapExceeded {
            what: "codimension degree".into(),
            needed: n as u128,
            cap: cfg.cap_n as u128,
        });
    }
    let work = tuples.saturating_mul(factorial(n));
    if work > cfg.cap_evals {
        return Err(Error::CapExceeded { what: "monomial evaluations".into(), needed: work, cap: cfg.cap_evals });
    }
    Ok(())
}

/// Calls `f` with every column of the evaluation matrix (one entry per
/// monomial order) until it returns false.
fn for_each_column<A: Arith>(
    ar: &A,
    table: &LoweredTable<A::Elem>,
    slot_bases: &[Vec<Vec<A::Elem>>],
    perms: &[Vec<usize>],
    mut f: impl FnMut(Vec<A::Elem>) -> bool,
) {
    let n = slot_bases.len();
    let d = table.dim();
    let mut idx = vec![0usize; n];
    loop {
        let vals: Vec<&Vec<A::Elem>> = idx.iter().zip(slot_bases).map(|(&i, b)| &b[i]).collect();
        let mut products: Vec<Vec<A::Elem>> = Vec::with_capacity(perms.len());
        let mut stack: Vec<Vec<A::Elem>> = Vec::with_capacity(n);
        let mut prev: Option<&Vec<usize>> = None;
        for perm in perms {
            // reuse the common prefix with the previous permutation
            let common = prev.map_or(0, |p| p.iter().zip(perm).take_while(|(a, b)| a == b).count());
            stack.truncate(common);
            for &s in &perm[stack.len()..] {
                let next = match stack.last() {
                    None => vals[s].clone(),
                    Some(acc) => table.mul(ar, acc, vals[s]),
                };
                stack.push(next);
            }
            products.push(stack.last().expect("n >= 1").clone());
            prev = Some(perm);
        }
        for c in 0..d {
            let col: Vec<A::Elem> = products.iter().map(|p| p[c].clone()).collect();
            if !ar.vec_is_zero(&col) && !f(col) {
                return;
            }
        }
        let Some(pos) = (0..n).rev().find(|&s| idx[s] + 1 < slot_bases[s].len()) else {
            return;
        };
        idx[pos] += 1;
        for s in pos + 1..n {
            idx[s] = 0;
        }
    }
}

fn lower_bases<A: Arith>(ar: &A, bases: &[&[Vec<Rational>]]) -> Option<Vec<Vec<Vec<A::Elem>>>> {
    bases.iter().map(|b| b.iter().map(|v| ar.lift_vec(v)).collect()).collect()
}

fn rank_for_kinds(
    alg: &StarSuperAlgebra,
    bases: &EvalBases,
    kinds: &[VarKind],
    cfg: &AnalysisConfig,
) -> Result<usize> {
    let slot: Vec<&[Vec<Rational>]> = kinds.iter().map(|&k| bases.basis(k)).collect();
    let tuples = slot.iter().fold(1u128, |acc, b| acc.saturating_mul(b.len() as u128));
    check_caps(kinds.len(), tuples, cfg)?;
    if tuples == 0 {
        return Ok(0);
    }
    let n = kinds.len();
    let perms = permutations(n);
    let rows = perms.len();
    let screen = cfg.mod_p.map(ModPrime::new);

    let integers = Integers::new();
    let exact = (|| {
        let table = LoweredTable::new(alg, &integers)?;
        let lowered = lower_bases(&integers, &slot)?;
        let mut rank = ExactRank::new(rows);
        let mut modp = screen.map(|f| (f, ModpRank::new(f.modulus())));
        for_each_column(&integers, &table, &lowered, &perms, |col| {
            if integers.overflowed() {
                return false;
            }
            rank.insert_i128(&col);
            if let Some((f, r)) = modp.as_mut() {
                r.insert(col.iter().map(|&x| f.reduce_bigint(&x.into())).collect());
            }
            !(rank.is_full() && modp.as_ref().is_none_or(|(_, r)| r.rank() == rows))
        });
        (!integers.overflowed()).then(|| (rank.rank(), modp.map(|(_, r)| r.rank())))
    })();
    let (rank, screened) = match exact {
        Some(r) => r,
        None => {
            let table = LoweredTable::new(alg, &Rationals).expect("rationals lift");
            let lowered = lower_bases(&Rationals, &slot).expect("rationals lift");
            let mut rank = ExactRank::new(rows);
            let mut modp = screen.map(|f| (f, ModpRank::new(f.modulus())));
            let mut bad_denominator = false;
            for_each_column(&Rationals, &table, &lowered, &perms, |col| {
                rank.insert(primitive_integer_vec(&col));
                if let Some((f, r)) = modp.as_mut() {
                    match f.lift_vec(&col) {
                        Some(v) => {
                            r.insert(v);
                        }
                        None => bad_denominator = true,
                    }
                }
                !(rank.is_full() && modp.as_ref().is_none_or(|(_, r)| r.rank() == rows))
            });
            if bad_denominator {
                return Err(Error::InvalidParameter("a denominator vanishes modulo the screening prime".into()));
            }
            (rank.rank(), modp.map(|(_, r)| r.rank()))
        }
    };
    if let Some(s) = screened {
        if s != rank {
            return Err(Error::Internal(format!(
                "exact rank {rank} differs from rank {s} modulo {}",
                cfg.mod_p.unwrap_or_default()
            )));
        }
    }
    Ok(rank)
}

/// Rank of the evaluation matrix of the multilinear monomials whose slots
/// carry the given kinds (in this order).
pub fn kind_vector_rank(alg: &StarSuperAlgebra, kinds: &[VarKind], cfg: &AnalysisConfig) -> Result<usize> {
    rank_for_kinds(alg, &EvalBases::new(alg), kinds, cfg)
}

/// The full evaluation matrix: rows are the `n!` monomial orders
/// (lexicographic), columns are (basis tuple, output coordinate) pairs.
pub fn evaluation_matrix(
    alg: &StarSuperAlgebra,
    kinds: &[VarKind],
    cfg: &AnalysisConfig,
) -> Result<Vec<Vec<Rational>>> {
    let bases = EvalBases::new(alg);
    let slot: Vec<&[Vec<Rational>]> = kinds.iter().map(|&k| bases.basis(k)).collect();
    let tuples = slot.iter().fold(1u128, |acc, b| acc.saturating_mul(b.len() as u128));
    check_caps(kinds.len(), tuples, cfg)?;
    let perms = permutations(kinds.len());
    let mut rows = vec![Vec::new(); perms.len()];
    if tuples == 0 {
        return Ok(rows);
    }
    let table = LoweredTable::new(alg, &Rationals).expect("rationals lift");
    let lowered = lower_bases(&Rationals, &slot).expect("rationals lift");
    // zero columns are skipped; they do not affect the rank
    for_each_column(&Rationals, &table, &lowered, &perms, |col| {
        for (r, x) in rows.iter_mut().zip(col) {
            r.push(x);
        }
        true
    });
    Ok(rows)
}

/// `c_n` of the graded-involution identities: the sum over kind contents of
/// multinomial × rank of the canonical kind vector.
pub fn codim_graded(alg: &StarSuperAlgebra, n: usize, cfg: &AnalysisConfig) -> Result<CodimReport> {
    check_caps(n, 0, cfg)?;
    let bases = EvalBases::new(alg);
    let contents = kind_contents(n);
    let ranks: Vec<usize> = contents
        .par_iter()
        .map(|c| rank_for_kinds(alg, &bases, &canonical_kinds(c), cfg))
        .collect::<Result<_>>()?;
    let value = contents.iter().zip(&ranks).map(|(c, &r)| multinomial(c) * r as u128).sum();
    Ok(CodimReport { n, value, per_kind_ranks: contents.into_iter().zip(ranks).collect() })
}

/// Ordinary codimension `c_n`: all slots unrestricted.
pub fn codim_ordinary(alg: &StarSuperAlgebra, n: usize, cfg: &AnalysisConfig) -> Result<u128> {
    let bases = EvalBases::new(alg);
    Ok(rank_for_kinds(alg, &bases, &vec![VarKind::Any; n], cfg)? as u128)
}

/// Graded codimensions for `n = 1..=n_max` with their `n`-th roots.
pub fn codim_table(alg: &StarSuperAlgebra, n_max: usize, cfg: &AnalysisConfig) -> Result<Vec<CodimRow>> {
    (1..=n_max)
        .map(|n| {
            let report = codim_graded(alg, n, cfg)?;
            let root = (report.value as f64).powf(1.0 / n as f64);
            Ok(CodimRow { report, root })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contents_and_multinomials() {
        assert_eq!(kind_contents(1).len(), 4);
        assert_eq!(kind_contents(3).len(), 20);
        assert_eq!(kind_contents(2)[0], [0, 0, 0, 2]);
        let total: u128 = kind_contents(4).iter().map(multinomial).sum();
        assert_eq!(total, 256);
        assert_eq!(permutations(3).len(), 6);
    }
}
