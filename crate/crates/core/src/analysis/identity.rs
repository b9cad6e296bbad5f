use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::bases::EvalBases;
use super::{AnalysisConfig, Witness, WitnessPoly, WitnessReport};
use crate::algebra::StarSuperAlgebra;
use crate::arith::{Arith, Integers, ModPrime, Rationals};
use crate::error::{Error, Result};
use crate::lowered::{LoweredTable, RightMap};
use crate::polynomials::{
    capelli_dp, evaluate, evaluate_alternating_fast, CapelliSpec, GeneratorSet, MultilinearPoly,
};
use crate::rational::{is_zero_vec, Rational};

/// The Mersenne prime `2^61 − 1`, used by the randomized witness search.
pub(crate) const SEARCH_PRIME: u64 = (1 << 61) - 1;

/// Largest alternating rank handled by the subset dynamic program.
const MAX_RANK: usize = 24;

/// Number of `k`-subsets of an `n`-set, saturating.
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    r
}

/// Decides whether a Capelli-type polynomial vanishes on the algebra.
pub fn is_capelli_identity(
    alg: &StarSuperAlgebra,
    spec: &CapelliSpec,
    cfg: &AnalysisConfig,
) -> Result<WitnessReport> {
    capelli_identity_with(alg, &EvalBases::new(alg), spec, cfg)
}

/// Checks every member; the first failing member's witness is returned.
pub fn satisfies_generator_set(
    alg: &StarSuperAlgebra,
    set: &GeneratorSet,
    cfg: &AnalysisConfig,
) -> Result<WitnessReport> {
    let bases = EvalBases::new(alg);
    for spec in set.members() {
        let r = capelli_identity_with(alg, &bases, spec, cfg)?;
        if !r.is_identity {
            return Ok(r);
        }
    }
    Ok(WitnessReport::identity())
}

pub(crate) fn capelli_identity_with(
    alg: &StarSuperAlgebra,
    bases: &EvalBases,
    spec: &CapelliSpec,
    cfg: &AnalysisConfig,
) -> Result<WitnessReport> {
    let tb = bases.basis(spec.kind());
    let m = spec.m();
    if m > tb.len() {
        // no m linearly independent entries exist in the component
        return Ok(WitnessReport::identity());
    }
    if m > MAX_RANK {
        return Err(Error::CapExceeded {
            what: "alternating rank".into(),
            needed: m as u128,
            cap: MAX_RANK as u128,
        });
    }
    let xb = &bases.any;

    if let Some(eng) = Engine::new(alg, &Integers::new(), spec, tb, xb) {
        if let Some((tuple, xs)) = eng.structured(cfg.structured_budget) {
            if !eng.ar.overflowed() {
                return Ok(WitnessReport::violated(basis_witness(alg, spec, tb, xb, &tuple, &xs)?));
            }
        }
    }
    if let Some(w) = random_witness(alg, spec, tb, xb, cfg)? {
        return Ok(WitnessReport::violated(w));
    }
    exhaustive_capelli(alg, spec, tb, xb, cfg)
}

fn exhaustive_capelli(
    alg: &StarSuperAlgebra,
    spec: &CapelliSpec,
    tb: &[Vec<Rational>],
    xb: &[Vec<Rational>],
    cfg: &AnalysisConfig,
) -> Result<WitnessReport> {
    let nominal = binomial(tb.len(), spec.m())
        .saturating_mul((xb.len() as u128).saturating_pow(spec.num_x() as u32));
    if nominal > cfg.cap_evals {
        return Err(Error::CapExceeded {
            what: format!("assignments for {spec}"),
            needed: nominal,
            cap: cfg.cap_evals,
        });
    }
    let tuples = combinations(tb.len(), spec.m());

    let integers = Integers::new();
    let exact = match Engine::new(alg, &integers, spec, tb, xb) {
        Some(eng) => {
            let found = eng.exhaustive(&tuples);
            if integers.overflowed() {
                None
            } else {
                Some(found)
            }
        }
        None => None,
    };
    let exact = match exact {
        Some(f) => f,
        None => Engine::new(alg, &Rationals, spec, tb, xb)
            .expect("rationals lift")
            .exhaustive(&tuples),
    };

    if let Some(p) = cfg.mod_p {
        let field = ModPrime::new(p);
        let eng = Engine::new(alg, &field, spec, tb, xb).ok_or_else(|| {
            Error::InvalidParameter(format!("structure constants are not defined modulo {p}"))
        })?;
        let screened = eng.exhaustive(&tuples);
        if screened.is_some() != exact.is_some() {
            return Err(Error::Internal(format!(
                "exact and modulo-{p} identity checks disagree for {spec}"
            )));
        }
    }

    match exact {
        None => Ok(WitnessReport::identity()),
        Some((tuple, xs)) => Ok(WitnessReport::violated(basis_witness(alg, spec, tb, xb, &tuple, &xs)?)),
    }
}

/// Builds the exact witness for a tuple of alternating basis indices and
/// the `x` basis index chosen for each surviving gap.
fn basis_witness(
    alg: &StarSuperAlgebra,
    spec: &CapelliSpec,
    tb: &[Vec<Rational>],
    xb: &[Vec<Rational>],
    tuple: &[usize],
    xs: &[usize],
) -> Result<Witness> {
    let mut assignment: Vec<Vec<Rational>> = tuple.iter().map(|&i| tb[i].clone()).collect();
    assignment.extend(xs.iter().map(|&i| xb[i].clone()));
    exact_witness(alg, spec, assignment)
}

fn exact_witness(alg: &StarSuperAlgebra, spec: &CapelliSpec, assignment: Vec<Vec<Rational>>) -> Result<Witness> {
    let output = evaluate_alternating_fast(alg, spec, &assignment)?;
    if is_zero_vec(&output) {
        return Err(Error::Internal(format!("witness for {spec} evaluates to zero exactly")));
    }
    Ok(Witness { poly: WitnessPoly::Capelli(spec.clone()), assignment, output })
}

fn random_combination(rng: &mut ChaCha8Rng, basis: &[Vec<Rational>], d: usize) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); d];
    for b in basis {
        let c = Rational::from_integer(rng.gen_range(-100i64..=100).into());
        for (x, y) in v.iter_mut().zip(b) {
            *x += &c * y;
        }
    }
    v
}

fn spec_seed(cfg: &AnalysisConfig, spec: &CapelliSpec) -> u64 {
    let mut mask = 0u64;
    for g in spec.deleted_gaps() {
        mask |= 1 << g;
    }
    let kind = spec.kind() as u64;
    cfg.seed ^ (spec.m() as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (kind << 56) ^ mask.rotate_left(17)
}

/// Random small-integer combinations evaluated modulo a large prime; a
/// nonzero residue proves the exact value is nonzero.
fn random_witness(
    alg: &StarSuperAlgebra,
    spec: &CapelliSpec,
    tb: &[Vec<Rational>],
    xb: &[Vec<Rational>],
    cfg: &AnalysisConfig,
) -> Result<Option<Witness>> {
    let field = ModPrime::new(SEARCH_PRIME);
    let Some(table) = LoweredTable::new(alg, &field) else {
        return Ok(None);
    };
    let d = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(spec_seed(cfg, spec));
    for _ in 0..cfg.random_trials {
        let ts: Vec<Vec<Rational>> = (0..spec.m()).map(|_| random_combination(&mut rng, tb, d)).collect();
        let xs: Vec<Option<Vec<Rational>>> = (0..spec.m().saturating_sub(1))
            .map(|g| (!spec.is_deleted(g)).then(|| random_combination(&mut rng, xb, d)))
            .collect();
        let lift = |v: &Vec<Rational>| field.lift_vec(v).expect("integer vectors lift");
        let ts_p: Vec<Vec<u64>> = ts.iter().map(lift).collect();
        let xs_p: Vec<Option<Vec<u64>>> = xs.iter().map(|x| x.as_ref().map(lift)).collect();
        let out = capelli_dp(&table, &field, spec, &ts_p, &xs_p);
        if !field.vec_is_zero(&out) {
            let mut assignment = ts;
            assignment.extend(xs.into_iter().flatten());
            return exact_witness(alg, spec, assignment).map(Some);
        }
    }
    Ok(None)
}

/// All strictly increasing `m`-tuples from `0..k` in lexicographic order.
pub(crate) fn combinations(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m > k {
        return out;
    }
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..m).rev().find(|&i| cur[i] < k - m + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..m {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

type Layer<E> = Vec<(usize, Vec<E>)>;

/// Prefix-sharing evaluator of one Capelli member over fixed bases.
struct Engine<'a, A: Arith> {
    ar: &'a A,
    spec: &'a CapelliSpec,
    dim: usize,
    t_vecs: Vec<Vec<A::Elem>>,
    t_maps: Vec<RightMap<A::Elem>>,
    x_maps: Vec<RightMap<A::Elem>>,
    minus_one: A::Elem,
}

impl<'a, A: Arith> Engine<'a, A> {
    fn new(
        alg: &StarSuperAlgebra,
        ar: &'a A,
        spec: &'a CapelliSpec,
        tb: &[Vec<Rational>],
        xb: &[Vec<Rational>],
    ) -> Option<Self> {
        let table = LoweredTable::new(alg, ar)?;
        let t_vecs: Vec<Vec<A::Elem>> = tb.iter().map(|v| ar.lift_vec(v)).collect::<Option<_>>()?;
        let x_vecs: Vec<Vec<A::Elem>> = xb.iter().map(|v| ar.lift_vec(v)).collect::<Option<_>>()?;
        let t_maps = t_vecs.iter().map(|t| table.right_map(ar, t)).collect();
        let x_maps = x_vecs.iter().map(|x| table.right_map(ar, x)).collect();
        Some(Engine { ar, spec, dim: alg.dim(), t_vecs, t_maps, x_maps, minus_one: ar.neg(&ar.one()) })
    }

    fn first_layer(&self, tuple: &[usize]) -> Layer<A::Elem> {
        tuple
            .iter()
            .enumerate()
            .filter(|(_, &i)| !self.ar.vec_is_zero(&self.t_vecs[i]))
            .map(|(a, &i)| (1 << a, self.t_vecs[i].clone()))
            .collect()
    }

    /// Multiplies every partial sum by the gap entry, then appends each
    /// unused alternating entry with the sign of the resulting inversions.
    fn step(&self, layer: &Layer<A::Elem>, tuple: &[usize], x: Option<usize>) -> Layer<A::Elem> {
        let ar = self.ar;
        let m = tuple.len();
        let mut next: BTreeMap<usize, Vec<A::Elem>> = BTreeMap::new();
        for (mask, v) in layer {
            let w = match x {
                Some(xi) => self.x_maps[xi].apply(ar, v),
                None => v.clone(),
            };
            if ar.vec_is_zero(&w) {
                continue;
            }
            for (a, &ti) in tuple.iter().enumerate().take(m) {
                if mask >> a & 1 == 1 {
                    continue;
                }
                let slot = next.entry(mask | 1 << a).or_insert_with(|| ar.zeros(self.dim));
                if (mask >> (a + 1)).count_ones() % 2 == 1 {
                    self.t_maps[ti].apply_add_scaled(ar, &self.minus_one, &w, slot);
                } else {
                    self.t_maps[ti].apply_add(ar, &w, slot);
                }
            }
        }
        next.into_iter().filter(|(_, v)| !ar.vec_is_zero(v)).collect()
    }

    /// Depth-first search over the `x` choices of the remaining gaps; returns
    /// the first choice sequence giving a nonzero value.
    fn dfs(&self, layer: Layer<A::Elem>, tuple: &[usize], gap: usize, xs: &mut Vec<usize>) -> bool {
        if gap + 1 >= tuple.len() {
            return !layer.is_empty();
        }
        if self.spec.is_deleted(gap) {
            let next = self.step(&layer, tuple, None);
            return !next.is_empty() && self.dfs(next, tuple, gap + 1, xs);
        }
        for xi in 0..self.x_maps.len() {
            let next = self.step(&layer, tuple, Some(xi));
            if next.is_empty() {
                continue;
            }
            xs.push(xi);
            if self.dfs(next, tuple, gap + 1, xs) {
                return true;
            }
            xs.pop();
        }
        false
    }

    fn tuple_witness(&self, tuple: &[usize]) -> Option<Vec<usize>> {
        let layer = self.first_layer(tuple);
        if layer.is_empty() {
            return None;
        }
        let mut xs = Vec::new();
        self.dfs(layer, tuple, 0, &mut xs).then_some(xs)
    }

    fn exhaustive(&self, tuples: &[Vec<usize>]) -> Option<(Vec<usize>, Vec<usize>)> {
        tuples
            .par_iter()
            .find_map_first(|t| self.tuple_witness(t).map(|xs| (t.clone(), xs)))
    }

    /// Value of the member at a fixed tuple and gap choices.
    fn value(&self, tuple: &[usize], xs: &[usize]) -> bool {
        let mut layer = self.first_layer(tuple);
        let mut it = xs.iter();
        for gap in 0..tuple.len().saturating_sub(1) {
            if layer.is_empty() {
                return false;
            }
            let x = if self.spec.is_deleted(gap) { None } else { it.next().copied() };
            layer = self.step(&layer, tuple, x);
        }
        !layer.is_empty()
    }

    /// Grows a chain `t_1 x_1 t_2 ⋯` with a nonzero running product, in the
    /// spirit of matrix-unit staircases, and tests the full alternating sum
    /// at each complete chain. Bounded by `budget` complete chains.
    fn structured(&self, budget: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut leaves = 0usize;
        let mut nodes = 0usize;
        let node_budget = budget.saturating_mul(64);
        let mut used = Vec::new();
        let mut xs = Vec::new();
        for start in 0..self.t_vecs.len() {
            if self.ar.vec_is_zero(&self.t_vecs[start]) {
                continue;
            }
            used.push(start);
            let found = self.chain(
                self.t_vecs[start].clone(),
                &mut used,
                &mut xs,
                &mut leaves,
                &mut nodes,
                budget,
                node_budget,
            );
            used.pop();
            if let Some(r) = found {
                return Some(r);
            }
            if leaves >= budget || nodes >= node_budget {
                break;
            }
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn chain(
        &self,
        prod: Vec<A::Elem>,
        used: &mut Vec<usize>,
        xs: &mut Vec<usize>,
        leaves: &mut usize,
        nodes: &mut usize,
        budget: usize,
        node_budget: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let m = self.spec.m();
        if used.len() == m {
            *leaves += 1;
            let mut order: Vec<usize> = (0..m).collect();
            order.sort_by_key(|&a| used[a]);
            let tuple: Vec<usize> = order.iter().map(|&a| used[a]).collect();
            return self.value(&tuple, xs).then(|| (tuple, xs.clone()));
        }
        if *leaves >= budget || *nodes >= node_budget {
            return None;
        }
        *nodes += 1;
        let gap = used.len() - 1;
        let candidates: Vec<Option<usize>> = if self.spec.is_deleted(gap) {
            vec![None]
        } else {
            (0..self.x_maps.len()).map(Some).collect()
        };
        for x in candidates {
            let px = match x {
                Some(xi) => self.x_maps[xi].apply(self.ar, &prod),
                None => prod.clone(),
            };
            if self.ar.vec_is_zero(&px) {
                continue;
            }
            for t in 0..self.t_vecs.len() {
                if used.contains(&t) {
                    continue;
                }
                let next = self.t_maps[t].apply(self.ar, &px);
                if self.ar.vec_is_zero(&next) {
                    continue;
                }
                used.push(t);
                if let Some(xi) = x {
                    xs.push(xi);
                }
                let r = self.chain(next, used, xs, leaves, nodes, budget, node_budget);
                if x.is_some() {
                    xs.pop();
                }
                used.pop();
                if r.is_some() {
                    return r;
                }
                if *leaves >= budget || *nodes >= node_budget {
                    return None;
                }
            }
        }
        None
    }
}

/// Decides whether a general multilinear polynomial vanishes when each slot
/// ranges over the basis of its kind's component.
pub fn is_graded_identity(
    alg: &StarSuperAlgebra,
    p: &MultilinearPoly,
    cfg: &AnalysisConfig,
) -> Result<WitnessReport> {
    let bases = EvalBases::new(alg);
    let slot_bases: Vec<&[Vec<Rational>]> = p.slot_kinds().iter().map(|&k| bases.basis(k)).collect();
    if p.is_zero() || slot_bases.iter().any(|b| b.is_empty()) {
        return Ok(WitnessReport::identity());
    }
    let witness = |assignment: Vec<Vec<Rational>>| -> Result<WitnessReport> {
        let output = evaluate(alg, p, &assignment)?;
        if is_zero_vec(&output) {
            return Err(Error::Internal("witness evaluates to zero exactly".into()));
        }
        Ok(WitnessReport::violated(Witness { poly: WitnessPoly::General(p.clone()), assignment, output }))
    };

    // randomized stage
    let field = ModPrime::new(SEARCH_PRIME);
    if let Some(table) = LoweredTable::new(alg, &field) {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5151);
        for _ in 0..cfg.random_trials {
            let assignment: Vec<Vec<Rational>> =
                slot_bases.iter().map(|b| random_combination(&mut rng, b, alg.dim())).collect();
            let lowered: Vec<Vec<u64>> =
                assignment.iter().map(|v| field.lift_vec(v).expect("integers lift")).collect();
            if !field.vec_is_zero(&eval_lowered(&table, &field, p, &lowered)) {
                return witness(assignment);
            }
        }
    }

    let nominal = slot_bases.iter().fold(1u128, |acc, b| acc.saturating_mul(b.len() as u128));
    if nominal > cfg.cap_evals {
        return Err(Error::CapExceeded { what: "assignments".into(), needed: nominal, cap: cfg.cap_evals });
    }
    let table = LoweredTable::new(alg, &Rationals).expect("rationals lift");
    let mut idx = vec![0usize; slot_bases.len()];
    let mut found = None;
    loop {
        let assignment: Vec<Vec<Rational>> =
            idx.iter().zip(&slot_bases).map(|(&i, b)| b[i].clone()).collect();
        if !is_zero_vec(&eval_lowered(&table, &Rationals, p, &assignment)) {
            found = Some(assignment);
            break;
        }
        let Some(pos) = (0..idx.len()).rev().find(|&s| idx[s] + 1 < slot_bases[s].len()) else {
            break;
        };
        idx[pos] += 1;
        for s in pos + 1..idx.len() {
            idx[s] = 0;
        }
    }
    if let Some(q) = cfg.mod_p {
        let f = ModPrime::new(q);
        let t = LoweredTable::new(alg, &f).ok_or_else(|| {
            Error::InvalidParameter(format!("structure constants are not defined modulo {q}"))
        })?;
        if let Some(a) = &found {
            let lowered: Vec<Vec<u64>> = a.iter().map(|v| f.lift_vec(v).expect("integers lift")).collect();
            if f.vec_is_zero(&eval_lowered(&t, &f, p, &lowered)) {
                return Err(Error::Internal(format!("witness vanishes modulo {q}")));
            }
        }
    }
    match found {
        Some(a) => witness(a),
        None => Ok(WitnessReport::identity()),
    }
}

fn eval_lowered<A: Arith>(
    table: &LoweredTable<A::Elem>,
    ar: &A,
    p: &MultilinearPoly,
    assignment: &[Vec<A::Elem>],
) -> Vec<A::Elem> {
    let mut out = ar.zeros(table.dim());
    for (word, c) in p.terms() {
        let mut acc = assignment[word[0]].clone();
        for &s in &word[1..] {
            acc = table.mul(ar, &acc, &assignment[s]);
        }
        let c = ar.lift(c).expect("coefficients lift");
        for (o, a) in out.iter_mut().zip(acc) {
            ar.add_mul(o, &c, &a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(4, 2)[1], vec![0, 2]);
        assert_eq!(binomial(16, 8), 12870);
    }
}
