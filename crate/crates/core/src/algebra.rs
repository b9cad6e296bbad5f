//! Finite-dimensional superalgebras with graded involution, given by
//! structure constants over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::FamilyTag;
use crate::polynomials::VarKind;
use crate::rational::{is_zero_vec, unit_vec, zero_vec, Rational};
use crate::subspace::Subspace;

/// One simple block of a Wedderburn–Malcev decomposition, given by the
/// basis vectors spanning it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnBlock {
    pub indices: Vec<usize>,
    /// `None` for blocks that are not one of the classified families.
    pub family: Option<FamilyTag>,
}

/// Semisimple blocks plus the radical, as index sets of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnData {
    pub blocks: Vec<WedderburnBlock>,
    pub radical: Vec<usize>,
}

impl WedderburnData {
    pub fn block_span(&self, dim: usize, b: usize) -> Subspace {
        Subspace::from_indices(dim, self.blocks[b].indices.iter().copied())
    }

    pub fn radical_span(&self, dim: usize) -> Subspace {
        Subspace::from_indices(dim, self.radical.iter().copied())
    }

    fn shifted(&self, offset: usize) -> WedderburnData {
        WedderburnData {
            blocks: self
                .blocks
                .iter()
                .map(|b| WedderburnBlock {
                    indices: b.indices.iter().map(|i| i + offset).collect(),
                    family: b.family,
                })
                .collect(),
            radical: self.radical.iter().map(|i| i + offset).collect(),
        }
    }
}

/// A superalgebra with graded involution.
///
/// Basis vectors are grading-homogeneous. `star_cols[k]` is the image of
/// basis vector `k` under the involution (column `k` of its matrix).
#[derive(Debug, Clone, PartialEq)]
pub struct StarSuperAlgebra {
    labels: Vec<String>,
    /// `table[i][j]` lists `(k, c)` with `e_i e_j = Σ c e_k`, sorted by `k`.
    table: Vec<Vec<Vec<(usize, Rational)>>>,
    grading: Vec<u8>,
    star_cols: Vec<Vec<Rational>>,
    wedderburn: Option<WedderburnData>,
}

impl StarSuperAlgebra {
    /// Assembles an algebra, checking only shapes and index ranges.
    /// Repeated `(i, j, k)` entries are summed. Use [`Self::validate`] for
    /// the algebraic invariants.
    pub fn new(
        labels: Vec<String>,
        structure: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
        grading: Vec<u8>,
        star_cols: Vec<Vec<Rational>>,
        wedderburn: Option<WedderburnData>,
    ) -> Result<Self> {
        let d = labels.len();
        if grading.len() != d {
            return Err(Error::LengthMismatch { expected: d, got: grading.len() });
        }
        if let Some(g) = grading.iter().find(|&&g| g > 1) {
            return Err(Error::InvalidAlgebra(format!("grading value {g} is not 0 or 1")));
        }
        if star_cols.len() != d {
            return Err(Error::LengthMismatch { expected: d, got: star_cols.len() });
        }
        if let Some(c) = star_cols.iter().find(|c| c.len() != d) {
            return Err(Error::LengthMismatch { expected: d, got: c.len() });
        }
        let mut table = vec![vec![Vec::<(usize, Rational)>::new(); d]; d];
        for (i, j, k, c) in structure {
            if i >= d || j >= d || k >= d {
                return Err(Error::InvalidAlgebra(format!(
                    "structure index ({i}, {j}, {k}) out of range for dimension {d}"
                )));
            }
            let cell = &mut table[i][j];
            match cell.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, v)) => *v += c,
                None => cell.push((k, c)),
            }
        }
        for row in &mut table {
            for cell in row.iter_mut() {
                cell.retain(|(_, c)| !c.is_zero());
                cell.sort_by_key(|(k, _)| *k);
            }
        }
        if let Some(w) = &wedderburn {
            let bad = w
                .blocks
                .iter()
                .flat_map(|b| &b.indices)
                .chain(&w.radical)
                .find(|&&i| i >= d);
            if let Some(i) = bad {
                return Err(Error::InvalidAlgebra(format!("Wedderburn index {i} out of range")));
            }
        }
        Ok(StarSuperAlgebra { labels, table, grading, star_cols, wedderburn })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> &[u8] {
        &self.grading
    }

    pub fn star_image(&self, k: usize) -> &[Rational] {
        &self.star_cols[k]
    }

    pub fn wedderburn(&self) -> Option<&WedderburnData> {
        self.wedderburn.as_ref()
    }

    pub fn with_wedderburn(mut self, w: Option<WedderburnData>) -> Self {
        self.wedderburn = w;
        self
    }

    /// Nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn structure_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for (k, c) in cell {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// `e_i e_j` as a sparse list.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    /// True when all structure constants and involution entries are integers.
    pub fn is_integral(&self) -> bool {
        self.table.iter().flatten().flatten().all(|(_, c)| c.is_integer())
            && self.star_cols.iter().flatten().all(|c| c.is_integer())
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    /// Bilinear product of coordinate vectors.
    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim());
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    pub(crate) fn mul_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim());
        for (k, c) in &self.table[i][j] {
            out[*k] = c.clone();
        }
        out
    }

    /// Applies the involution.
    pub fn star(&self, u: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(u)?;
        Ok(self.star_vec(u))
    }

    pub(crate) fn star_vec(&self, u: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim());
        for (k, uk) in u.iter().enumerate() {
            if uk.is_zero() {
                continue;
            }
            for (r, c) in self.star_cols[k].iter().enumerate() {
                if !c.is_zero() {
                    out[r] += uk * c;
                }
            }
        }
        out
    }

    /// Degree of a vector if it is homogeneous and nonzero.
    pub fn degree_of(&self, v: &[Rational]) -> Option<u8> {
        let mut deg = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.grading[i]),
                Some(g) if g != self.grading[i] => return None,
                _ => {}
            }
        }
        deg
    }

    /// Checks every invariant of a superalgebra with graded involution and
    /// returns one entry per violated invariant.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut report = ValidationReport::default();

        for (i, row) in self.table.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for (k, _) in cell {
                    if self.grading[*k] != (self.grading[i] + self.grading[j]) % 2 {
                        report.push(
                            ViolationKind::GradingCompatibility,
                            vec![i, j, *k],
                            format!("e{i}·e{j} has a component on e{k} of the wrong degree"),
                        );
                    }
                }
            }
        }

        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul(&ij, &unit_vec(d, k));
                    let right = self.mul(&unit_vec(d, i), &self.mul_basis(j, k));
                    if left != right {
                        report.push(
                            ViolationKind::Associativity,
                            vec![i, j, k],
                            format!("(e{i}e{j})e{k} != e{i}(e{j}e{k})"),
                        );
                    }
                }
            }
        }

        for k in 0..d {
            let twice = self.star_vec(&self.star_cols[k]);
            if twice != unit_vec(d, k) {
                report.push(
                    ViolationKind::InvolutionOrder,
                    vec![k],
                    format!("star(star(e{k})) != e{k}"),
                );
            }
            if let Some(r) = (0..d)
                .find(|&r| !self.star_cols[k][r].is_zero() && self.grading[r] != self.grading[k])
            {
                report.push(
                    ViolationKind::InvolutionGrading,
                    vec![k, r],
                    format!("star(e{k}) has a component on e{r} of another degree"),
                );
            }
        }

        for i in 0..d {
            for j in 0..d {
                let lhs = self.star_vec(&self.mul_basis(i, j));
                let rhs = self.mul(&self.star_cols[j], &self.star_cols[i]);
                if lhs != rhs {
                    report.push(
                        ViolationKind::Antiautomorphism,
                        vec![i, j],
                        format!("star(e{i}e{j}) != star(e{j})star(e{i})"),
                    );
                }
            }
        }

        if let Some(w) = &self.wedderburn {
            let mut seen = vec![0usize; d];
            for i in w.blocks.iter().flat_map(|b| &b.indices).chain(&w.radical) {
                seen[*i] += 1;
            }
            if let Some(i) = seen.iter().position(|&c| c != 1) {
                report.push(
                    ViolationKind::WedderburnPartition,
                    vec![i],
                    format!("basis vector {i} is covered {} times by blocks and radical", seen[i]),
                );
            }
            for (b, block) in w.blocks.iter().enumerate() {
                let span = w.block_span(d, b);
                let closed = block.indices.iter().all(|&i| {
                    span.contains(&self.star_cols[i])
                        && block.indices.iter().all(|&j| span.contains(&self.mul_basis(i, j)))
                });
                if !closed {
                    report.push(
                        ViolationKind::WedderburnBlock,
                        vec![b],
                        format!("block {b} is not closed under product and star"),
                    );
                }
            }
        }
        report
    }

    /// The four homogeneous symmetric/skew components.
    pub fn hom_components(&self) -> HomComponents {
        let d = self.dim();
        let part = |deg: u8, sign: i64| {
            let sign = Rational::from_integer(sign.into());
            Subspace::span(
                d,
                (0..d).filter(|&i| self.grading[i] == deg).map(|i| {
                    let mut v = unit_vec(d, i);
                    for (x, s) in v.iter_mut().zip(&self.star_cols[i]) {
                        *x += &sign * s;
                    }
                    v
                }),
            )
        };
        HomComponents {
            even_sym: part(0, 1),
            even_skew: part(0, -1),
            odd_sym: part(1, 1),
            odd_skew: part(1, -1),
        }
    }

    /// Span of all products `u v` with `u ∈ U`, `v ∈ V`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        if u.ambient() != self.dim() || v.ambient() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: if u.ambient() != self.dim() { u.ambient() } else { v.ambient() },
            });
        }
        let prods = u
            .basis()
            .iter()
            .flat_map(|a| v.basis().iter().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .filter(|p| !is_zero_vec(p));
        Ok(Subspace::span(self.dim(), prods))
    }

    /// `A²`, the span of all products of basis vectors.
    pub fn square(&self) -> Subspace {
        let d = self.dim();
        Subspace::span(
            d,
            (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).filter_map(|(i, j)| {
                let p = self.mul_basis(i, j);
                (!is_zero_vec(&p)).then_some(p)
            }),
        )
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &StarSuperAlgebra) -> StarSuperAlgebra {
        let (da, db) = (self.dim(), other.dim());
        let d = da + db;
        let shift = |(i, j, k, c): (usize, usize, usize, Rational)| (i + da, j + da, k + da, c);
        let structure: Vec<_> = self
            .structure_entries()
            .into_iter()
            .chain(other.structure_entries().into_iter().map(shift))
            .collect();
        let star_cols = self
            .star_cols
            .iter()
            .map(|c| {
                let mut v = c.clone();
                v.resize(d, Rational::zero());
                v
            })
            .chain(other.star_cols.iter().map(|c| {
                let mut v = zero_vec(da);
                v.extend(c.iter().cloned());
                v
            }))
            .collect();
        let wedderburn = match (&self.wedderburn, &other.wedderburn) {
            (Some(a), Some(b)) => {
                let b = b.shifted(da);
                Some(WedderburnData {
                    blocks: a.blocks.iter().cloned().chain(b.blocks).collect(),
                    radical: a.radical.iter().copied().chain(b.radical).collect(),
                })
            }
            _ => None,
        };
        StarSuperAlgebra::new(
            self.labels.iter().chain(&other.labels).cloned().collect(),
            structure,
            self.grading.iter().chain(&other.grading).copied().collect(),
            star_cols,
            wedderburn,
        )
        .expect("direct sum of well-formed algebras is well-formed")
    }

    /// A two-sided unit, if the algebra has one.
    pub fn unit(&self) -> Option<Vec<Rational>> {
        let all: Vec<usize> = (0..self.dim()).collect();
        self.unit_within(&all)
    }

    /// A unit for the subalgebra spanned by the given basis vectors.
    pub fn unit_within(&self, indices: &[usize]) -> Option<Vec<Rational>> {
        let d = self.dim();
        let n = indices.len();
        // unknowns: coefficients on `indices`; equations u e_b = e_b = e_b u
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &b in indices {
            for side in 0..2 {
                let mut eqs = vec![zero_vec(n); d];
                for (col, &a) in indices.iter().enumerate() {
                    let cell = if side == 0 { &self.table[a][b] } else { &self.table[b][a] };
                    for (k, c) in cell {
                        eqs[*k][col] += c;
                    }
                }
                for (k, eq) in eqs.into_iter().enumerate() {
                    rows.push(eq);
                    rhs.push(if k == b { Rational::one() } else { Rational::zero() });
                }
            }
        }
        let coef = crate::linalg::solve(&rows, &rhs, n)?;
        let mut u = zero_vec(d);
        for (c, &a) in coef.into_iter().zip(indices) {
            u[a] = c;
        }
        Some(u)
    }
}

/// The four homogeneous components `A_0^+, A_0^-, A_1^+, A_1^-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomComponents {
    pub even_sym: Subspace,
    pub even_skew: Subspace,
    pub odd_sym: Subspace,
    pub odd_skew: Subspace,
}

impl HomComponents {
    /// `(M⁺, M⁻, L⁺, L⁻)`.
    pub fn dims(&self) -> [usize; 4] {
        [self.even_sym.dim(), self.even_skew.dim(), self.odd_sym.dim(), self.odd_skew.dim()]
    }

    /// Component of a graded kind; `None` for [`VarKind::Any`].
    pub fn component(&self, kind: VarKind) -> Option<&Subspace> {
        match kind {
            VarKind::YPlus => Some(&self.even_sym),
            VarKind::YMinus => Some(&self.even_skew),
            VarKind::ZPlus => Some(&self.odd_sym),
            VarKind::ZMinus => Some(&self.odd_skew),
            VarKind::Any => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    Associativity,
    GradingCompatibility,
    InvolutionOrder,
    InvolutionGrading,
    Antiautomorphism,
    WedderburnPartition,
    WedderburnBlock,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Associativity => "associativity",
            ViolationKind::GradingCompatibility => "grading compatibility",
            ViolationKind::InvolutionOrder => "involution order",
            ViolationKind::InvolutionGrading => "involution grading",
            ViolationKind::Antiautomorphism => "antiautomorphism",
            ViolationKind::WedderburnPartition => "wedderburn partition",
            ViolationKind::WedderburnBlock => "wedderburn block",
        })
    }
}

/// A violated invariant with the first witnessing basis indices and the
/// number of witnesses found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
    pub count: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn contains(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn get(&self, kind: ViolationKind) -> Option<&Violation> {
        self.violations.iter().find(|v| v.kind == kind)
    }

    fn push(&mut self, kind: ViolationKind, witness: Vec<usize>, detail: String) {
        match self.violations.iter_mut().find(|v| v.kind == kind) {
            Some(v) => v.count += 1,
            None => self.violations.push(Violation { kind, witness, count: 1, detail }),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for v in &self.violations {
            writeln!(f, "{}: {} ({} witnesses, first {:?})", v.kind, v.detail, v.count, v.witness)?;
        }
        Ok(())
    }
}
