use std::fmt;

use num_traits::One;

use super::{MultilinearPoly, VarKind};
use crate::algebra::StarSuperAlgebra;
use crate::arith::{Arith, Rationals};
use crate::error::{Error, Result};
use crate::lowered::LoweredTable;
use crate::rational::Rational;

/// A member of a barred Capelli set: rank `m`, the kind of the alternating
/// variables, and which of the `m − 1` interleaved `x` variables are deleted.
///
/// Slot layout of the materialized polynomial: slots `0..m` are the
/// alternating variables, followed by the surviving `x` variables in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CapelliSpec {
    m: usize,
    kind: VarKind,
    deleted: Vec<bool>,
}

impl CapelliSpec {
    /// `deleted` lists 0-based gap indices (gap `i` sits between alternating
    /// positions `i` and `i + 1`).
    pub fn new(m: usize, kind: VarKind, deleted: &[usize]) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("Capelli rank must be at least 1".into()));
        }
        let mut mask = vec![false; m - 1];
        for &g in deleted {
            if g + 1 >= m {
                return Err(Error::InvalidParameter(format!(
                    "gap {g} does not exist for rank {m}"
                )));
            }
            mask[g] = true;
        }
        Ok(CapelliSpec { m, kind, deleted: mask })
    }

    /// The undeleted member.
    pub fn full(m: usize, kind: VarKind) -> Result<Self> {
        Self::new(m, kind, &[])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn is_deleted(&self, gap: usize) -> bool {
        self.deleted[gap]
    }

    pub fn deleted_gaps(&self) -> Vec<usize> {
        (0..self.m - 1).filter(|&g| self.deleted[g]).collect()
    }

    pub fn num_x(&self) -> usize {
        self.deleted.iter().filter(|&&d| !d).count()
    }

    pub fn num_slots(&self) -> usize {
        self.m + self.num_x()
    }

    /// Slot index of the `x` variable in the given gap, if not deleted.
    pub fn x_slot(&self, gap: usize) -> Option<usize> {
        if self.deleted[gap] {
            return None;
        }
        Some(self.m + self.deleted[..gap].iter().filter(|&&d| !d).count())
    }

    /// Expands the alternating sum into an explicit polynomial (`m!` terms).
    pub fn materialize(&self) -> MultilinearPoly {
        let m = self.m;
        let mut kinds = vec![self.kind; m];
        kinds.extend(std::iter::repeat_n(VarKind::Any, self.num_x()));
        let mut poly = MultilinearPoly::new(kinds);
        for (perm, odd) in permutations(m) {
            let mut word = Vec::with_capacity(self.num_slots());
            for (pos, &t) in perm.iter().enumerate() {
                word.push(t);
                if pos + 1 < m {
                    if let Some(x) = self.x_slot(pos) {
                        word.push(x);
                    }
                }
            }
            let coef = if odd { -Rational::one() } else { Rational::one() };
            poly.add_term(word, coef).expect("Capelli words are valid");
        }
        poly
    }
}

impl fmt::Display for CapelliSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cap{}[{}]", self.m, self.kind)?;
        let del = self.deleted_gaps();
        if !del.is_empty() {
            let del: Vec<String> = del.iter().map(|g| format!("x{}", g + 1)).collect();
            write!(f, " without {}", del.join(","))?;
        }
        Ok(())
    }
}

/// All permutations of `0..m` with their parity (`true` = odd).
fn permutations(m: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn rec(
        m: usize,
        cur: &mut Vec<usize>,
        used: &mut [bool],
        odd: bool,
        out: &mut Vec<(Vec<usize>, bool)>,
    ) {
        if cur.len() == m {
            out.push((cur.clone(), odd));
            return;
        }
        for a in 0..m {
            if used[a] {
                continue;
            }
            // inversions added by appending a: earlier entries greater than a
            let inv = cur.iter().filter(|&&b| b > a).count();
            used[a] = true;
            cur.push(a);
            rec(m, cur, used, odd ^ (inv % 2 == 1), out);
            cur.pop();
            used[a] = false;
        }
    }
    rec(m, &mut cur, &mut used, false, &mut out);
    out
}

/// A finite list of Capelli-type generators, kept as descriptors and
/// materialized on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    members: Vec<CapelliSpec>,
}

impl GeneratorSet {
    pub fn new(members: Vec<CapelliSpec>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidParameter("generator set must be nonempty".into()));
        }
        Ok(GeneratorSet { members })
    }

    pub fn members(&self) -> &[CapelliSpec] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn polys(&self) -> Vec<MultilinearPoly> {
        self.members.iter().map(CapelliSpec::materialize).collect()
    }
}

pub fn capelli_ordinary(m: usize) -> Result<MultilinearPoly> {
    Ok(CapelliSpec::full(m, VarKind::Any)?.materialize())
}

pub fn capelli_graded(m: usize, kind: VarKind) -> Result<MultilinearPoly> {
    if kind == VarKind::Any {
        return Err(Error::InvalidParameter("graded Capelli needs a graded kind".into()));
    }
    Ok(CapelliSpec::full(m, kind)?.materialize())
}

/// The `2^{m−1}` polynomials obtained by deleting subsets of the `x`
/// variables, starting with the undeleted one.
pub fn barred_capelli_set(m: usize, kind: VarKind) -> Result<GeneratorSet> {
    if m == 0 {
        return Err(Error::InvalidParameter("Capelli rank must be at least 1".into()));
    }
    if m > 40 {
        return Err(Error::InvalidParameter(format!("rank {m} is too large")));
    }
    let members = (0u64..1 << (m - 1))
        .map(|mask| {
            let del: Vec<usize> = (0..m - 1).filter(|g| mask >> g & 1 == 1).collect();
            CapelliSpec::new(m, kind, &del)
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(members)
}

/// Union of the barred sets of ranks `(M⁺, M⁻, L⁺, L⁻)` in the kinds
/// `Y⁺, Y⁻, Z⁺, Z⁻`.
pub fn gamma_generators(m_plus: usize, m_minus: usize, l_plus: usize, l_minus: usize) -> Result<GeneratorSet> {
    let mut members = Vec::new();
    for (rank, kind) in [m_plus, m_minus, l_plus, l_minus].into_iter().zip(VarKind::GRADED) {
        members.extend(barred_capelli_set(rank, kind)?.members);
    }
    GeneratorSet::new(members)
}

/// Evaluates a Capelli member by dynamic programming over subsets of the
/// alternating entries. `ts` are the alternating entries, `xs[g]` the entry
/// for gap `g` (ignored when deleted).
pub(crate) fn capelli_dp<A: Arith>(
    table: &LoweredTable<A::Elem>,
    ar: &A,
    spec: &CapelliSpec,
    ts: &[Vec<A::Elem>],
    xs: &[Option<Vec<A::Elem>>],
) -> Vec<A::Elem> {
    let m = spec.m();
    let t_maps: Vec<_> = ts.iter().map(|t| table.right_map(ar, t)).collect();
    let x_maps: Vec<_> =
        xs.iter().map(|x| x.as_ref().map(|x| table.right_map(ar, x))).collect();
    let minus_one = ar.neg(&ar.one());
    let mut v: Vec<Option<Vec<A::Elem>>> = vec![None; 1 << m];
    for (a, t) in ts.iter().enumerate() {
        if !ar.vec_is_zero(t) {
            v[1 << a] = Some(t.clone());
        }
    }
    let full = (1usize << m) - 1;
    for mask in 1..full {
        let Some(cur) = v[mask].take() else { continue };
        let gap = mask.count_ones() as usize - 1;
        let w = match &x_maps[gap] {
            Some(xm) => xm.apply(ar, &cur),
            None => cur,
        };
        if ar.vec_is_zero(&w) {
            continue;
        }
        for (a, tm) in t_maps.iter().enumerate() {
            if mask >> a & 1 == 1 {
                continue;
            }
            let next = mask | 1 << a;
            let slot = v[next].get_or_insert_with(|| ar.zeros(table.dim()));
            if (mask >> (a + 1)).count_ones() % 2 == 1 {
                tm.apply_add_scaled(ar, &minus_one, &w, slot);
            } else {
                tm.apply_add(ar, &w, slot);
            }
        }
    }
    v[full].take().unwrap_or_else(|| ar.zeros(table.dim()))
}

/// Same value as evaluating `spec.materialize()` at `assignment`, computed
/// in `O(2^m · m)` products.
pub fn evaluate_alternating_fast(
    alg: &StarSuperAlgebra,
    spec: &CapelliSpec,
    assignment: &[Vec<Rational>],
) -> Result<Vec<Rational>> {
    if assignment.len() != spec.num_slots() {
        return Err(Error::LengthMismatch { expected: spec.num_slots(), got: assignment.len() });
    }
    let d = alg.dim();
    if let Some(v) = assignment.iter().find(|v| v.len() != d) {
        return Err(Error::LengthMismatch { expected: d, got: v.len() });
    }
    if spec.m() > 24 {
        return Err(Error::InvalidParameter(format!("rank {} is too large", spec.m())));
    }
    let table = LoweredTable::new(alg, &Rationals).expect("rationals lift");
    let ts = &assignment[..spec.m()];
    let xs: Vec<Option<Vec<Rational>>> =
        (0..spec.m() - 1).map(|g| spec.x_slot(g).map(|s| assignment[s].clone())).collect();
    Ok(capelli_dp(&table, &Rationals, spec, ts, &xs))
}
