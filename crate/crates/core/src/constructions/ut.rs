use std::collections::BTreeMap;

use num_traits::Zero;

use super::families::build_family;
use crate::algebra::{StarSuperAlgebra, WedderburnBlock, WedderburnData};
use crate::error::{Error, Result};
use crate::family::FamilyTag;
use crate::radical::jacobson_radical;
use crate::rational::Rational;
use crate::subspace::Subspace;

/// Components and grading shifts `g̃ = (g_1, …, g_m)` of a block-triangular
/// algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtSpec {
    pub components: Vec<FamilyTag>,
    pub gtilde: Vec<u8>,
}

impl UtSpec {
    pub fn new(components: Vec<FamilyTag>, gtilde: Vec<u8>) -> Result<Self> {
        let spec = UtSpec { components, gtilde };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.components.is_empty() {
            return Err(Error::InvalidParameter("need at least one component".into()));
        }
        if self.gtilde.len() != self.components.len() {
            return Err(Error::LengthMismatch {
                expected: self.components.len(),
                got: self.gtilde.len(),
            });
        }
        if self.gtilde.iter().any(|&g| g > 1) {
            return Err(Error::InvalidParameter("grading shifts must be 0 or 1".into()));
        }
        self.components.iter().try_for_each(FamilyTag::validate)
    }
}

/// Block sizes, partial sums and the degree map of the ambient matrix
/// algebra `M_{2η}` (indices 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UtLayout {
    pub sizes: Vec<usize>,
    /// `eta[k]` = sum of the first `k` sizes; `eta.len() = m + 1`.
    pub eta: Vec<usize>,
    pub alpha: Vec<u8>,
}

impl UtLayout {
    fn new(spec: &UtSpec) -> Self {
        let sizes: Vec<usize> = spec.components.iter().map(FamilyTag::size).collect();
        let mut eta = vec![0];
        for s in &sizes {
            eta.push(eta.last().unwrap() + s);
        }
        let top = *eta.last().unwrap();
        let mut alpha = vec![0u8; 2 * top];
        for (k, tag) in spec.components.iter().enumerate() {
            for p in eta[k]..eta[k + 1] {
                alpha[p] = (tag.alpha(p - eta[k]) + spec.gtilde[k]) % 2;
            }
        }
        for p in top..2 * top {
            alpha[p] = alpha[2 * top - 1 - p];
        }
        UtLayout { sizes, eta, alpha }
    }

    /// `η_m`, half the ambient matrix size.
    pub fn half(&self) -> usize {
        *self.eta.last().unwrap()
    }

    /// Block containing a top-half index.
    pub fn block_of(&self, p: usize) -> usize {
        (0..self.sizes.len()).find(|&k| p < self.eta[k + 1]).expect("index in top half")
    }

    /// Size of the ambient matrix algebra.
    pub fn ambient(&self) -> usize {
        2 * self.half()
    }
}

/// A block-triangular algebra together with its layout and the matrices
/// realizing its basis.
#[derive(Debug, Clone)]
pub struct UtStar {
    pub algebra: StarSuperAlgebra,
    pub layout: UtLayout,
    /// Basis vector `b` as a sparse matrix `(row, col) -> entry`.
    pub matrices: Vec<BTreeMap<(usize, usize), Rational>>,
}

type Mat = BTreeMap<(usize, usize), Rational>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = Mat::new();
    for (&(i, j), x) in a {
        for (&(_, k), y) in b.range((j, 0)..(j + 1, 0)) {
            let e = out.entry((i, k)).or_insert_with(Rational::zero);
            *e += x * y;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The reflection along the secondary diagonal of `M_N`.
fn gamma(a: &Mat, n: usize) -> Mat {
    a.iter().map(|(&(i, j), x)| ((n - 1 - j, n - 1 - i), x.clone())).collect()
}

/// Embedding of a component basis vector into its top block, before
/// symmetrization: the image under the block's defining representation.
fn top_image(tag: FamilyTag, b: usize, offset: usize) -> Mat {
    let one = Rational::from_integer(1.into());
    let mut m = Mat::new();
    let mut put = |i: usize, j: usize| {
        m.insert((offset + i, offset + j), one.clone());
    };
    match tag {
        FamilyTag::MhlT { .. } | FamilyTag::MhhS { .. } | FamilyTag::MhlExc { .. } => {
            let s = tag.size();
            if b < s * s {
                put(b / s, b % s);
            }
        }
        FamilyTag::MnCmnStar { n, .. } | FamilyTag::MnCmnDagger { n, .. } | FamilyTag::MnCmnExc { n } => {
            let nn = n * n;
            if b < 2 * nn {
                let (i, j) = ((b % nn) / n, b % n);
                if b < nn {
                    put(i, j);
                    put(n + i, n + j);
                } else {
                    put(i, n + j);
                    put(n + i, j);
                }
            }
        }
    }
    m
}

/// Builds `UT*(A_1, …, A_m)` with grading shifts `g̃` as a subalgebra of
/// `M_{2η}` with the secondary-diagonal reflection as involution, and checks
/// that each component embeds as a graded *-subalgebra and that the radical
/// is the strictly block-upper part.
pub fn ut_star(spec: &UtSpec) -> Result<UtStar> {
    spec.validate()?;
    let layout = UtLayout::new(spec);
    let big = layout.ambient();
    let comps: Vec<StarSuperAlgebra> =
        spec.components.iter().map(|&t| build_family(t)).collect::<Result<_>>()?;

    let mut matrices: Vec<Mat> = Vec::new();
    let mut labels = Vec::new();
    let mut blocks = Vec::new();
    for (k, (tag, comp)) in spec.components.iter().zip(&comps).enumerate() {
        let start = matrices.len();
        for b in 0..comp.dim() {
            let mut m = top_image(*tag, b, layout.eta[k]);
            let star = comp.star_image(b);
            let mut mirrored = Mat::new();
            for (r, c) in star.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (pos, x) in top_image(*tag, r, layout.eta[k]) {
                    *mirrored.entry(pos).or_insert_with(Rational::zero) += c * x;
                }
            }
            for (pos, x) in gamma(&mirrored, big) {
                if !x.is_zero() {
                    m.insert(pos, x);
                }
            }
            matrices.push(m);
            labels.push(format!("D{}({})", k + 1, comp.labels()[b]));
        }
        blocks.push(WedderburnBlock {
            indices: (start..matrices.len()).collect(),
            family: Some(*tag),
        });
    }
    let v_start = matrices.len();
    let m = spec.components.len();
    for i in 0..m {
        for j in i + 1..m {
            for p in layout.eta[i]..layout.eta[i + 1] {
                for q in layout.eta[j]..layout.eta[j + 1] {
                    let one = Rational::from_integer(1.into());
                    matrices.push(Mat::from([((p, q), one.clone())]));
                    labels.push(format!("E{},{}", p + 1, q + 1));
                    let (gp, gq) = (big - 1 - q, big - 1 - p);
                    matrices.push(Mat::from([((gp, gq), one)]));
                    labels.push(format!("E{},{}", gp + 1, gq + 1));
                }
            }
        }
    }
    let radical: Vec<usize> = (v_start..matrices.len()).collect();
    let d = matrices.len();

    // each basis matrix owns a position no other basis matrix touches
    let mut owners: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (b, mat) in matrices.iter().enumerate() {
        for pos in mat.keys() {
            owners.entry(*pos).or_default().push(b);
        }
    }
    let pivots: Vec<(usize, usize)> = matrices
        .iter()
        .enumerate()
        .map(|(b, mat)| {
            mat.keys()
                .find(|pos| owners[pos].len() == 1)
                .copied()
                .ok_or_else(|| Error::Internal(format!("basis matrix {b} has no private position")))
        })
        .collect::<Result<_>>()?;
    let coords = |x: &Mat| -> Result<Vec<Rational>> {
        let c: Vec<Rational> = (0..d)
            .map(|b| match x.get(&pivots[b]) {
                Some(v) => v / &matrices[b][&pivots[b]],
                None => Rational::zero(),
            })
            .collect();
        let mut rebuilt = Mat::new();
        for (b, cb) in c.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            for (pos, v) in &matrices[b] {
                *rebuilt.entry(*pos).or_insert_with(Rational::zero) += cb * v;
            }
        }
        rebuilt.retain(|_, v| !v.is_zero());
        if &rebuilt != x {
            return Err(Error::Internal("span of the block-triangular basis is not closed".into()));
        }
        Ok(c)
    };

    let mut structure = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let p = mat_mul(&matrices[a], &matrices[b]);
            if p.is_empty() {
                continue;
            }
            for (k, c) in coords(&p)?.into_iter().enumerate() {
                if !c.is_zero() {
                    structure.push((a, b, k, c));
                }
            }
        }
    }
    let star_cols = matrices.iter().map(|x| coords(&gamma(x, big))).collect::<Result<Vec<_>>>()?;
    let grading = matrices
        .iter()
        .enumerate()
        .map(|(b, x)| {
            let mut degs = x.keys().map(|&(p, q)| (layout.alpha[p] + layout.alpha[q]) % 2);
            let first = degs.next().expect("nonzero basis matrix");
            if degs.all(|g| g == first) {
                Ok(first)
            } else {
                Err(Error::Internal(format!("basis matrix {b} is not homogeneous")))
            }
        })
        .collect::<Result<Vec<u8>>>()?;

    let algebra = StarSuperAlgebra::new(
        labels,
        structure,
        grading,
        star_cols,
        Some(WedderburnData { blocks, radical: radical.clone() }),
    )?;
    let out = UtStar { algebra, layout, matrices };
    check_ut(&out, &comps)?;
    Ok(out)
}

fn check_ut(ut: &UtStar, comps: &[StarSuperAlgebra]) -> Result<()> {
    let alg = &ut.algebra;
    let report = alg.validate();
    if !report.is_empty() {
        return Err(Error::Internal(format!("block-triangular algebra is invalid: {report}")));
    }
    let w = alg.wedderburn().expect("constructed with Wedderburn data");
    let d = alg.dim();
    for (block, comp) in w.blocks.iter().zip(comps) {
        let off = block.indices[0];
        let embed = |v: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); d];
            out[off..off + v.len()].clone_from_slice(v);
            out
        };
        for a in 0..comp.dim() {
            if alg.grading()[off + a] != comp.grading()[a]
                || alg.star_image(off + a) != embed(comp.star_image(a)).as_slice()
            {
                return Err(Error::Internal("component embedding does not preserve star or grading".into()));
            }
            for b in 0..comp.dim() {
                let lhs = alg.mul_basis(off + a, off + b);
                if lhs != embed(&comp.mul_basis(a, b)) {
                    return Err(Error::Internal("component embedding is not multiplicative".into()));
                }
            }
        }
    }
    let v = Subspace::from_indices(d, w.radical.iter().copied());
    if jacobson_radical(alg)? != v {
        return Err(Error::Internal("radical of the block-triangular algebra differs from V".into()));
    }
    let gamma_v = v.map(|x| alg.star_vec(x));
    if gamma_v != v {
        return Err(Error::Internal("V is not stable under the involution".into()));
    }
    Ok(())
}
