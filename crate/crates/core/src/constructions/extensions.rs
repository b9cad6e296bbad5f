use num_traits::{One, Zero};

use crate::algebra::{StarSuperAlgebra, WedderburnBlock, WedderburnData};
use crate::error::{Error, Result};
use crate::radical::{is_star_graded_simple, verify_wedderburn_radical};
use crate::rational::{zero_vec, Rational};
use crate::subspace::Subspace;

/// A finite-dimensional nilpotent algebra with involution and trivial
/// grading, given by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct NilpotentSpec {
    algebra: StarSuperAlgebra,
}

impl NilpotentSpec {
    /// Checks associativity, the involution axioms and nilpotency.
    pub fn new(
        labels: Vec<String>,
        structure: Vec<(usize, usize, usize, Rational)>,
        star_cols: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let d = labels.len();
        let algebra = StarSuperAlgebra::new(labels, structure, vec![0; d], star_cols, None)?;
        let report = algebra.validate();
        if !report.is_empty() {
            return Err(Error::InvalidAlgebra(format!("nilpotent part: {report}")));
        }
        let full = Subspace::full(d);
        let mut power = full.clone();
        for _ in 0..=d {
            if power.is_zero() {
                return Ok(NilpotentSpec { algebra });
            }
            power = algebra.subspace_product(&power, &full)?;
        }
        Err(Error::InvalidAlgebra("algebra is not nilpotent".into()))
    }

    pub fn algebra(&self) -> &StarSuperAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// `span{n, n², …, n^k}` with `n^{k+1} = 0` and `n* = n`.
pub fn commutative_nilpotent(k: usize) -> Result<NilpotentSpec> {
    if k == 0 {
        return Err(Error::InvalidParameter("need k >= 1".into()));
    }
    let labels = (1..=k).map(|i| if i == 1 { "n".to_string() } else { format!("n^{i}") }).collect();
    let mut structure = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a + b + 1 < k {
                structure.push((a, b, a + b + 1, Rational::one()));
            }
        }
    }
    let star = (0..k).map(|i| crate::rational::unit_vec(k, i)).collect();
    NilpotentSpec::new(labels, structure, star)
}

/// `span{n1, n2, n1n2, n2n1}` with `n_i² = 0`, all triple products zero,
/// `n_i* = n_i` and `(n1n2)* = n2n1`.
pub fn noncommutative_nilpotent() -> Result<NilpotentSpec> {
    let labels = ["n1", "n2", "n1n2", "n2n1"].map(String::from).to_vec();
    let structure = vec![(0, 1, 2, Rational::one()), (1, 0, 3, Rational::one())];
    let u = |i| crate::rational::unit_vec(4, i);
    NilpotentSpec::new(labels, structure, vec![u(0), u(1), u(3), u(2)])
}

fn require_simple_unital(a: &StarSuperAlgebra) -> Result<()> {
    if !is_star_graded_simple(a)? {
        return Err(Error::InvalidParameter("base algebra must be simple".into()));
    }
    if a.unit().is_none() {
        return Err(Error::NotUnital("base algebra".into()));
    }
    Ok(())
}

fn base_family(a: &StarSuperAlgebra) -> Option<crate::family::FamilyTag> {
    match a.wedderburn() {
        Some(w) if w.blocks.len() == 1 => w.blocks[0].family,
        _ => None,
    }
}

/// `R = A ⊕ V ⊕ V°` where `V` and `V°` are copies of `A`; `A` acts on `V`
/// only from the left and on `V°` only from the right, products inside the
/// radical vanish, and the involution exchanges `V` and `V°`.
pub fn one_sided_radical_extension(a: &StarSuperAlgebra) -> Result<StarSuperAlgebra> {
    require_simple_unital(a)?;
    let d = a.dim();
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend(a.labels().iter().map(|l| format!("v({l})")));
    labels.extend(a.labels().iter().map(|l| format!("v°({l})")));
    let mut structure = Vec::new();
    for (i, j, k, c) in a.structure_entries() {
        structure.push((i, j, k, c.clone()));
        structure.push((i, d + j, d + k, c.clone()));
        structure.push((2 * d + i, j, 2 * d + k, c));
    }
    let mut grading = a.grading().to_vec();
    grading.extend_from_slice(a.grading());
    grading.extend_from_slice(a.grading());
    let place = |v: &[Rational], off: usize| {
        let mut out = zero_vec(3 * d);
        out[off..off + d].clone_from_slice(v);
        out
    };
    let mut star_cols: Vec<Vec<Rational>> = (0..d).map(|k| place(a.star_image(k), 0)).collect();
    star_cols.extend((0..d).map(|k| place(a.star_image(k), 2 * d)));
    star_cols.extend((0..d).map(|k| place(a.star_image(k), d)));
    let w = WedderburnData {
        blocks: vec![WedderburnBlock { indices: (0..d).collect(), family: base_family(a) }],
        radical: (d..3 * d).collect(),
    };
    let r = StarSuperAlgebra::new(labels, structure, grading, star_cols, Some(w))?;
    check_extension(&r)?;
    Ok(r)
}

/// `R = A ⊗ N^♯` where `N^♯` is `N` with a unit adjoined. Basis: `a ⊗ 1`
/// for each basis vector of `A`, then `a ⊗ n_j` grouped by `j`.
pub fn tensor_nilpotent_extension(a: &StarSuperAlgebra, n: &NilpotentSpec) -> Result<StarSuperAlgebra> {
    require_simple_unital(a)?;
    let (da, dn) = (a.dim(), n.dim());
    let nalg = n.algebra();
    let idx = |t: usize, i: usize| t * da + i;
    let mut labels = a.labels().to_vec();
    for l in nalg.labels() {
        labels.extend(a.labels().iter().map(|x| format!("{x}⊗{l}")));
    }
    // products in N♯: t = 0 is the unit, t = j + 1 is n_j
    let sharp = |s: usize, t: usize| -> Vec<(usize, Rational)> {
        match (s, t) {
            (0, t) => vec![(t, Rational::one())],
            (s, 0) => vec![(s, Rational::one())],
            (s, t) => nalg.basis_product(s - 1, t - 1).iter().map(|(k, c)| (k + 1, c.clone())).collect(),
        }
    };
    let mut structure = Vec::new();
    let a_entries = a.structure_entries();
    for s in 0..=dn {
        for t in 0..=dn {
            for (u, cn) in sharp(s, t) {
                for (i, j, k, ca) in &a_entries {
                    structure.push((idx(s, *i), idx(t, *j), idx(u, *k), ca * &cn));
                }
            }
        }
    }
    let grading: Vec<u8> = (0..=dn).flat_map(|_| a.grading().iter().copied()).collect();
    let dim = da * (dn + 1);
    let mut star_cols = Vec::with_capacity(dim);
    for t in 0..=dn {
        let nstar: Vec<Rational> = if t == 0 {
            let mut v = zero_vec(dn + 1);
            v[0] = Rational::one();
            v
        } else {
            std::iter::once(Rational::zero()).chain(nalg.star_image(t - 1).iter().cloned()).collect()
        };
        for i in 0..da {
            let mut col = zero_vec(dim);
            for (u, cn) in nstar.iter().enumerate() {
                if cn.is_zero() {
                    continue;
                }
                for (r, ca) in a.star_image(i).iter().enumerate() {
                    if !ca.is_zero() {
                        col[idx(u, r)] += cn * ca;
                    }
                }
            }
            star_cols.push(col);
        }
    }
    let w = WedderburnData {
        blocks: vec![WedderburnBlock { indices: (0..da).collect(), family: base_family(a) }],
        radical: (da..dim).collect(),
    };
    let r = StarSuperAlgebra::new(labels, structure, grading, star_cols, Some(w))?;
    check_extension(&r)?;
    Ok(r)
}

fn check_extension(r: &StarSuperAlgebra) -> Result<()> {
    let report = r.validate();
    if !report.is_empty() {
        return Err(Error::Internal(format!("extension is invalid: {report}")));
    }
    verify_wedderburn_radical(r).map_err(|e| Error::Internal(format!("extension radical: {e}")))
}
