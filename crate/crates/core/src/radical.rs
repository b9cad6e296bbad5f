//! Jacobson radical, Peirce decomposition and simplicity tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::StarSuperAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve};
use crate::rational::{primitive_integer_vec, unit_vec, zero_vec, Rational};
use crate::subspace::Subspace;

/// The Jacobson radical, computed as the kernel of the trace form
/// `(x, y) ↦ Tr(L_{xy})` and checked to be a nilpotent ideal.
pub fn jacobson_radical(alg: &StarSuperAlgebra) -> Result<Subspace> {
    let d = alg.dim();
    // Tr(L_{e_a}) = Σ_m (e_a e_m)_m
    let traces: Vec<Rational> = (0..d)
        .map(|a| {
            (0..d)
                .flat_map(|m| alg.basis_product(a, m).iter().filter(move |(k, _)| *k == m))
                .map(|(_, c)| c.clone())
                .sum()
        })
        .collect();
    let gram: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| alg.basis_product(i, j).iter().map(|(k, c)| c * &traces[*k]).sum())
                .collect()
        })
        .collect();
    let radical = Subspace::span(d, nullspace(&gram, d));
    check_nilpotent_ideal(alg, &radical)?;
    Ok(radical)
}

fn check_nilpotent_ideal(alg: &StarSuperAlgebra, j: &Subspace) -> Result<()> {
    let full = Subspace::full(alg.dim());
    if !alg.subspace_product(&full, j)?.is_subspace_of(j)
        || !alg.subspace_product(j, &full)?.is_subspace_of(j)
    {
        return Err(Error::Internal("trace-form kernel is not an ideal".into()));
    }
    let mut power = j.clone();
    for _ in 0..=alg.dim() {
        if power.is_zero() {
            return Ok(());
        }
        power = alg.subspace_product(&power, j)?;
    }
    Err(Error::Internal("trace-form kernel is not nilpotent".into()))
}

/// Checks that the declared radical of a Wedderburn decomposition equals
/// the computed Jacobson radical.
pub fn verify_wedderburn_radical(alg: &StarSuperAlgebra) -> Result<()> {
    let w = alg.wedderburn().ok_or(Error::MissingWedderburn)?;
    if w.radical_span(alg.dim()) != jacobson_radical(alg)? {
        return Err(Error::InvalidAlgebra(
            "declared radical differs from the Jacobson radical".into(),
        ));
    }
    Ok(())
}

/// Peirce components of the radical with respect to the unit `e` of the
/// semisimple part: `j_pq = {x ∈ J : e x = p x, x e = q x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeirceDecomposition {
    pub unit: Vec<Rational>,
    pub j11: Subspace,
    pub j10: Subspace,
    pub j01: Subspace,
    pub j00: Subspace,
}

impl PeirceDecomposition {
    /// `(dim j11, dim j10, dim j01, dim j00)`.
    pub fn dims(&self) -> [usize; 4] {
        [self.j11.dim(), self.j10.dim(), self.j01.dim(), self.j00.dim()]
    }

    fn component(&self, p: usize, q: usize) -> &Subspace {
        match (p, q) {
            (1, 1) => &self.j11,
            (1, 0) => &self.j10,
            (0, 1) => &self.j01,
            _ => &self.j00,
        }
    }
}

/// Unit of the semisimple part: the sum of the block units.
pub fn semisimple_unit(alg: &StarSuperAlgebra) -> Result<Vec<Rational>> {
    let w = alg.wedderburn().ok_or(Error::MissingWedderburn)?;
    let mut e = zero_vec(alg.dim());
    for (b, block) in w.blocks.iter().enumerate() {
        let u = alg
            .unit_within(&block.indices)
            .ok_or_else(|| Error::NotUnital(format!("Wedderburn block {b}")))?;
        for (x, y) in e.iter_mut().zip(u) {
            *x += y;
        }
    }
    Ok(e)
}

pub fn peirce_decompose(alg: &StarSuperAlgebra) -> Result<PeirceDecomposition> {
    verify_wedderburn_radical(alg)?;
    let d = alg.dim();
    let w = alg.wedderburn().ok_or(Error::MissingWedderburn)?;
    let j = w.radical_span(d);
    let e = semisimple_unit(alg)?;
    let ex = |x: &[Rational]| alg.mul(&e, x);
    let xe = |x: &[Rational]| alg.mul(x, &e);
    let sub = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    };
    let j11 = j.map(|x| xe(&ex(x)));
    let j10 = j.map(|x| sub(&ex(x), &xe(&ex(x))));
    let j01 = j.map(|x| sub(&xe(x), &xe(&ex(x))));
    let j00 = j.map(|x| {
        let a = sub(x, &ex(x));
        let b = sub(&xe(x), &xe(&ex(x)));
        sub(&a, &b)
    });
    let pd = PeirceDecomposition { unit: e.clone(), j11, j10, j01, j00 };

    let total = pd.dims().iter().sum::<usize>();
    if total != j.dim() {
        return Err(Error::Internal(format!(
            "Peirce components have total dimension {total}, radical has {}",
            j.dim()
        )));
    }
    for (p, q) in [(1, 1), (1, 0), (0, 1), (0, 0)] {
        for x in pd.component(p, q).basis() {
            let scaled = |s: usize| -> Vec<Rational> {
                if s == 1 { x.clone() } else { zero_vec(d) }
            };
            if ex(x) != scaled(p) || xe(x) != scaled(q) {
                return Err(Error::Internal(format!("Peirce component j{p}{q} is inconsistent")));
            }
        }
    }
    for (p, q) in [(1, 1), (1, 0), (0, 1), (0, 0)] {
        for (r, s) in [(1, 1), (1, 0), (0, 1), (0, 0)] {
            let prod = alg.subspace_product(pd.component(p, q), pd.component(r, s))?;
            let ok = if q == r { prod.is_subspace_of(pd.component(p, s)) } else { prod.is_zero() };
            if !ok {
                return Err(Error::Internal(format!(
                    "Peirce product j{p}{q}·j{r}{s} violates the module laws"
                )));
            }
        }
    }
    Ok(pd)
}

/// Elements of `j11` commuting with every semisimple block.
pub fn radical_centralizer(alg: &StarSuperAlgebra) -> Result<Subspace> {
    let pd = peirce_decompose(alg)?;
    let d = alg.dim();
    let w = alg.wedderburn().ok_or(Error::MissingWedderburn)?;
    let basis = pd.j11.basis();
    let n = basis.len();
    if n == 0 {
        return Ok(Subspace::zero(d));
    }
    // Σ c_t (x_t b - b x_t) = 0 for every semisimple basis vector b
    let mut rows = Vec::new();
    for block in &w.blocks {
        for &bi in &block.indices {
            let b = unit_vec(d, bi);
            let comms: Vec<Vec<Rational>> = basis
                .iter()
                .map(|x| {
                    let l = alg.mul(x, &b);
                    let r = alg.mul(&b, x);
                    l.iter().zip(&r).map(|(a, c)| a - c).collect()
                })
                .collect();
            for k in 0..d {
                rows.push(comms.iter().map(|c| c[k].clone()).collect::<Vec<_>>());
            }
        }
    }
    let coefs = nullspace(&rows, n);
    Ok(Subspace::span(
        d,
        coefs.into_iter().map(|c| {
            let mut v = zero_vec(d);
            for (ct, x) in c.iter().zip(basis) {
                for (vi, xi) in v.iter_mut().zip(x) {
                    *vi += ct * xi;
                }
            }
            v
        }),
    ))
}

/// The center `{z : z x = x z for all x}`.
pub fn center(alg: &StarSuperAlgebra) -> Subspace {
    let d = alg.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        // Σ_a z_a (e_a e_i - e_i e_a) = 0
        let mut eqs = vec![zero_vec(d); d];
        for a in 0..d {
            for (k, c) in alg.basis_product(a, i) {
                eqs[*k][a] += c;
            }
            for (k, c) in alg.basis_product(i, a) {
                eqs[*k][a] -= c;
            }
        }
        rows.extend(eqs);
    }
    Subspace::span(d, nullspace(&rows, d))
}

/// Decides whether the algebra is simple as a superalgebra with graded
/// involution: `A² ≠ 0` and no proper nonzero graded star-invariant ideals.
///
/// Returns [`Error::NonSplit`] when the center is not a product of copies
/// of the rationals.
pub fn is_star_graded_simple(alg: &StarSuperAlgebra) -> Result<bool> {
    let d = alg.dim();
    if d == 0 || alg.square().is_zero() {
        return Ok(false);
    }
    if !jacobson_radical(alg)?.is_zero() {
        return Ok(false);
    }
    let one = alg
        .unit()
        .ok_or_else(|| Error::Internal("semisimple algebra without a unit".into()))?;
    let z = center(alg);
    let idems = central_idempotents(alg, &z, &one)?;

    let find = |v: &[Rational]| idems.iter().position(|f| f.as_slice() == v);
    let mut parent: Vec<usize> = (0..idems.len()).collect();
    fn root(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (r, f) in idems.iter().enumerate() {
        let theta: Vec<Rational> = f
            .iter()
            .enumerate()
            .map(|(i, x)| if alg.grading()[i] == 1 { -x.clone() } else { x.clone() })
            .collect();
        for image in [theta, alg.star_vec(f)] {
            let s = find(&image).ok_or_else(|| {
                Error::Internal("automorphism does not permute central idempotents".into())
            })?;
            let (a, b) = (root(&mut parent, r), root(&mut parent, s));
            parent[a] = b;
        }
    }
    let r0 = root(&mut parent, 0);
    Ok((0..idems.len()).all(|i| root(&mut parent, i) == r0))
}

/// Primitive idempotents of a split commutative semisimple center.
fn central_idempotents(
    alg: &StarSuperAlgebra,
    z: &Subspace,
    one: &[Rational],
) -> Result<Vec<Vec<Rational>>> {
    let k = z.dim();
    if k == 1 {
        return Ok(vec![one.to_vec()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for attempt in 0..64 {
        let range = 3 + attempt as i64;
        let mut elem = zero_vec(alg.dim());
        for b in z.basis() {
            let c = Rational::from_integer(rng.gen_range(-range..=range).into());
            for (x, y) in elem.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
        let poly = minimal_polynomial(alg, &elem, one);
        let degree = poly.len() - 1;
        let Some(roots) = rational_roots(&poly) else {
            continue;
        };
        if roots.len() < degree {
            return Err(Error::NonSplit);
        }
        if degree < k {
            continue;
        }
        let idems: Vec<Vec<Rational>> = roots
            .iter()
            .map(|r| {
                let mut acc = one.to_vec();
                for s in roots.iter().filter(|s| *s != r) {
                    let factor: Vec<Rational> = elem
                        .iter()
                        .zip(one)
                        .map(|(x, u)| (x - s * u) / (r - s))
                        .collect();
                    acc = alg.mul(&acc, &factor);
                }
                acc
            })
            .collect();
        return Ok(idems);
    }
    Err(Error::Internal("no generic central element found".into()))
}

/// Monic minimal polynomial, coefficients from the constant term up.
fn minimal_polynomial(alg: &StarSuperAlgebra, x: &[Rational], one: &[Rational]) -> Vec<Rational> {
    let d = alg.dim();
    let mut powers = vec![one.to_vec()];
    loop {
        let next = alg.mul(powers.last().expect("nonempty"), x);
        // solve Σ c_i x^i = x^m
        let rows: Vec<Vec<Rational>> =
            (0..d).map(|r| powers.iter().map(|p| p[r].clone()).collect()).collect();
        if let Some(c) = solve(&rows, &next, powers.len()) {
            let mut poly: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            poly.push(Rational::one());
            return poly;
        }
        powers.push(next);
    }
}

/// Distinct rational roots of a polynomial (coefficients from the constant
/// term up). `None` when the extreme coefficients are too large to factor.
pub(crate) fn rational_roots(poly: &[Rational]) -> Option<Vec<Rational>> {
    let mut ints: Vec<BigInt> = primitive_integer_vec(poly);
    let mut roots = Vec::new();
    while ints.len() > 1 && ints[0].is_zero() {
        ints.remove(0);
        if !roots.contains(&Rational::zero()) {
            roots.push(Rational::zero());
        }
    }
    if ints.len() <= 1 {
        return Some(roots);
    }
    let a0 = ints[0].abs();
    let an = ints.last().expect("nonempty").abs();
    let (p0, qn) = (a0.to_u64().filter(|&v| v < 1 << 40)?, an.to_u64().filter(|&v| v < 1 << 40)?);
    for p in divisors(p0) {
        for q in divisors(qn) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(p) * sign, BigInt::from(q));
                if !roots.contains(&cand) && eval(poly, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out
}
