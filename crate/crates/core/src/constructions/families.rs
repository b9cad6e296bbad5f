use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::algebra::{StarSuperAlgebra, WedderburnBlock, WedderburnData};
use crate::error::{Error, Result};
use crate::family::{Diamond, FamilyTag};
use crate::rational::{rat, zero_vec, Rational};

/// Sign in `(a + cb)^♯ = a^⋄ ± c b^⋄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("unknown sign {s:?}, expected + or -"))),
        }
    }
}

/// `(M_{h,l}, t)`: matrix units of `M_{h+l}` in row-major order,
/// `deg e_ij = α(i) + α(j)`, transpose involution.
pub fn m_hl_transpose(h: usize, l: usize) -> Result<StarSuperAlgebra> {
    build_family(FamilyTag::MhlT { h, l })
}

/// `(M_{h,h}, s)` with `s(X) = Ω Xᵗ Ω⁻¹`, `Ω = [[0, I], [-I, 0]]`.
pub fn m_hh_symplectic(h: usize) -> Result<StarSuperAlgebra> {
    build_family(FamilyTag::MhhS { h })
}

/// `(M_{h,l} ⊕ M_{h,l}^op, exc)`; the second summand multiplies in reverse.
pub fn m_hl_exchange(h: usize, l: usize) -> Result<StarSuperAlgebra> {
    build_family(FamilyTag::MhlExc { h, l })
}

/// `(M_n + cM_n, ⋆)` for [`Sign::Minus`] and `(M_n + cM_n, †)` for
/// [`Sign::Plus`]. Basis: `e_ij` then `c·e_ij`.
pub fn mn_cmn(n: usize, diamond: Diamond, sign: Sign) -> Result<StarSuperAlgebra> {
    build_family(match sign {
        Sign::Minus => FamilyTag::MnCmnStar { n, diamond },
        Sign::Plus => FamilyTag::MnCmnDagger { n, diamond },
    })
}

/// `((M_n + cM_n) ⊕ (M_n + cM_n)^op, exc)`.
pub fn mn_cmn_exchange(n: usize) -> Result<StarSuperAlgebra> {
    build_family(FamilyTag::MnCmnExc { n })
}

/// `(M⁺, M⁻, L⁺, L⁻)`.
pub fn hom_dims(alg: &StarSuperAlgebra) -> [usize; 4] {
    alg.hom_components().dims()
}

/// Image of a matrix unit under an involution of `M_s`, as `(sign, i', j')`.
fn unit_involution(diamond: Diamond, s: usize, i: usize, j: usize) -> (i64, usize, usize) {
    match diamond {
        Diamond::T => (1, j, i),
        Diamond::S => {
            let h = s / 2;
            let eps = |a: usize| if a < h { 1 } else { -1 };
            let sigma = |a: usize| if a < h { a + h } else { a - h };
            (eps(i) * eps(j), sigma(j), sigma(i))
        }
    }
}

/// Builder for algebras whose basis vectors are tagged products of matrix
/// units with signed-permutation involutions.
struct Builder {
    labels: Vec<String>,
    structure: Vec<(usize, usize, usize, Rational)>,
    grading: Vec<u8>,
    star: Vec<(usize, i64)>,
}

impl Builder {
    fn finish(self, tag: FamilyTag) -> Result<StarSuperAlgebra> {
        let d = self.labels.len();
        let star_cols = self
            .star
            .iter()
            .map(|&(k, s)| {
                let mut v = zero_vec(d);
                v[k] = rat(s);
                v
            })
            .collect();
        let wedderburn = WedderburnData {
            blocks: vec![WedderburnBlock { indices: (0..d).collect(), family: Some(tag) }],
            radical: Vec::new(),
        };
        StarSuperAlgebra::new(self.labels, self.structure, self.grading, star_cols, Some(wedderburn))
    }
}

/// Structure constants of `M_s` (or its opposite) placed at `offset`.
fn matrix_block(b: &mut Builder, s: usize, offset: usize, opposite: bool) {
    let idx = |i: usize, j: usize| offset + i * s + j;
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                // e_ij e_jk = e_ik, or reversed in the opposite algebra
                if opposite {
                    b.structure.push((idx(j, k), idx(i, j), idx(i, k), Rational::one()));
                } else {
                    b.structure.push((idx(i, j), idx(j, k), idx(i, k), Rational::one()));
                }
            }
        }
    }
}

/// `M_n + cM_n` placed at `offset` (basis `e_ij` then `c e_ij`), optionally
/// opposite.
fn cmn_block(b: &mut Builder, n: usize, offset: usize, opposite: bool) {
    let nn = n * n;
    let idx = |c: usize, i: usize, j: usize| offset + c * nn + i * n + j;
    for c1 in 0..2 {
        for c2 in 0..2 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (x, y) = (idx(c1, i, j), idx(c2, j, k));
                        let z = idx((c1 + c2) % 2, i, k);
                        if opposite {
                            b.structure.push((y, x, z, Rational::one()));
                        } else {
                            b.structure.push((x, y, z, Rational::one()));
                        }
                    }
                }
            }
        }
    }
}

/// Builds the algebra of a family tag, with Wedderburn data naming it.
pub fn build_family(tag: FamilyTag) -> Result<StarSuperAlgebra> {
    tag.validate()?;
    let mut b = Builder { labels: Vec::new(), structure: Vec::new(), grading: Vec::new(), star: Vec::new() };
    match tag {
        FamilyTag::MhlT { .. } | FamilyTag::MhhS { .. } => {
            let s = tag.size();
            let diamond = if matches!(tag, FamilyTag::MhhS { .. }) { Diamond::S } else { Diamond::T };
            for i in 0..s {
                for j in 0..s {
                    b.labels.push(format!("e{}{}", i + 1, j + 1));
                    b.grading.push((tag.alpha(i) + tag.alpha(j)) % 2);
                    let (sg, ii, jj) = unit_involution(diamond, s, i, j);
                    b.star.push((ii * s + jj, sg));
                }
            }
            matrix_block(&mut b, s, 0, false);
        }
        FamilyTag::MhlExc { .. } => {
            let s = tag.size();
            let ss = s * s;
            for half in 0..2 {
                for i in 0..s {
                    for j in 0..s {
                        let suffix = if half == 0 { "" } else { "^op" };
                        b.labels.push(format!("e{}{}{suffix}", i + 1, j + 1));
                        b.grading.push((tag.alpha(i) + tag.alpha(j)) % 2);
                        b.star.push(((1 - half) * ss + i * s + j, 1));
                    }
                }
            }
            matrix_block(&mut b, s, 0, false);
            matrix_block(&mut b, s, ss, true);
        }
        FamilyTag::MnCmnStar { n, diamond } | FamilyTag::MnCmnDagger { n, diamond } => {
            let odd_sign = if matches!(tag, FamilyTag::MnCmnStar { .. }) { -1 } else { 1 };
            push_cmn_basis(&mut b, n, diamond, odd_sign, 0, "", None);
            cmn_block(&mut b, n, 0, false);
        }
        FamilyTag::MnCmnExc { n } => {
            let half = 2 * n * n;
            push_cmn_basis(&mut b, n, Diamond::T, 1, 0, "", Some(half));
            push_cmn_basis(&mut b, n, Diamond::T, 1, half, "^op", Some(0));
            cmn_block(&mut b, n, 0, false);
            cmn_block(&mut b, n, half, true);
        }
    }
    b.finish(tag)
}

/// Appends the `2n²` basis vectors of `M_n + cM_n`. With `exchange_with`,
/// the involution sends each vector to the same vector of the other copy;
/// otherwise it is `a^⋄ + odd_sign · c b^⋄`.
fn push_cmn_basis(
    b: &mut Builder,
    n: usize,
    diamond: Diamond,
    odd_sign: i64,
    offset: usize,
    suffix: &str,
    exchange_with: Option<usize>,
) {
    for c in 0..2 {
        for i in 0..n {
            for j in 0..n {
                let prefix = if c == 0 { "" } else { "c·" };
                b.labels.push(format!("{prefix}e{}{}{suffix}", i + 1, j + 1));
                b.grading.push(c as u8);
                let here = c * n * n + i * n + j;
                match exchange_with {
                    Some(other) => b.star.push((other + here, 1)),
                    None => {
                        let (sg, ii, jj) = unit_involution(diamond, n, i, j);
                        let sg = if c == 1 { sg * odd_sign } else { sg };
                        b.star.push((offset + c * n * n + ii * n + jj, sg));
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::unit_vec;

    #[test]
    fn constructors_validate() {
        let algs = [
            m_hl_transpose(2, 1).unwrap(),
            m_hh_symplectic(2).unwrap(),
            m_hl_exchange(1, 1).unwrap(),
            mn_cmn(2, Diamond::S, Sign::Minus).unwrap(),
            mn_cmn(1, Diamond::T, Sign::Plus).unwrap(),
            mn_cmn_exchange(2).unwrap(),
        ];
        for a in &algs {
            assert!(a.validate().is_empty(), "{}", a.validate());
        }
    }

    #[test]
    fn symplectic_star_on_e12() {
        let a = m_hh_symplectic(1).unwrap();
        let e12 = unit_vec(4, 1);
        let minus: Vec<Rational> = e12.iter().map(|x| -x.clone()).collect();
        assert_eq!(a.star(&e12).unwrap(), minus);
        assert_eq!(hom_dims(&a), [1, 1, 0, 2]);
    }

    #[test]
    fn opposite_product() {
        let a = m_hl_exchange(1, 1).unwrap();
        // (0,e12)(0,e21) = (0, e21 e12) = (0, e22)
        let p = a.multiply(&unit_vec(8, 5), &unit_vec(8, 6)).unwrap();
        assert_eq!(p, unit_vec(8, 7));
        let p = a.multiply(&unit_vec(8, 1), &unit_vec(8, 2)).unwrap();
        assert_eq!(p, unit_vec(8, 0));
    }

    #[test]
    fn central_odd_element_squares_to_one() {
        let a = mn_cmn(1, Diamond::T, Sign::Minus).unwrap();
        assert_eq!(a.multiply(&unit_vec(2, 1), &unit_vec(2, 1)).unwrap(), unit_vec(2, 0));
        assert_eq!(hom_dims(&a), [1, 0, 0, 1]);
        let b = mn_cmn(1, Diamond::T, Sign::Plus).unwrap();
        assert_eq!(hom_dims(&b), [1, 0, 1, 0]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(m_hl_transpose(1, 2).is_err());
        assert!(m_hl_transpose(0, 0).is_err());
        assert!(mn_cmn(3, Diamond::S, Sign::Plus).is_err());
        assert!(mn_cmn_exchange(0).is_err());
    }

    #[test]
    fn sign_parsing() {
        assert_eq!("+".parse::<Sign>().unwrap(), Sign::Plus);
        assert_eq!("-".parse::<Sign>().unwrap(), Sign::Minus);
        assert!("x".parse::<Sign>().is_err());
    }
}
