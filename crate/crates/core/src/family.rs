//! Tags for the classified simple superalgebras with graded involution.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// Involution used on a full matrix algebra: transpose or symplectic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diamond {
    T,
    S,
}

impl Diamond {
    pub fn as_str(self) -> &'static str {
        match self {
            Diamond::T => "t",
            Diamond::S => "s",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(Diamond::T),
            "s" => Ok(Diamond::S),
            _ => Err(Error::Parse(format!("unknown involution {s:?}, expected t or s"))),
        }
    }
}

/// One of the six families of finite-dimensional simple superalgebras with
/// graded involution over an algebraically closed field of characteristic 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// `(M_{h,l}, t)`
    MhlT { h: usize, l: usize },
    /// `(M_{h,h}, s)`
    MhhS { h: usize },
    /// `(M_{h,l} ⊕ M_{h,l}^op, exc)`
    MhlExc { h: usize, l: usize },
    /// `(M_n + cM_n, ⋆)` with `(a+cb)^⋆ = a^⋄ - c b^⋄`
    MnCmnStar { n: usize, diamond: Diamond },
    /// `(M_n + cM_n, †)` with `(a+cb)^† = a^⋄ + c b^⋄`
    MnCmnDagger { n: usize, diamond: Diamond },
    /// `((M_n + cM_n) ⊕ (M_n + cM_n)^op, exc)`
    MnCmnExc { n: usize },
}

impl FamilyTag {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        match *self {
            FamilyTag::MhlT { h, l } | FamilyTag::MhlExc { h, l } => {
                if h == 0 || l > h {
                    return bad(format!("need h >= l >= 0 and h != 0, got h={h}, l={l}"));
                }
            }
            FamilyTag::MhhS { h } => {
                if h == 0 {
                    return bad("symplectic family needs h >= 1".into());
                }
            }
            FamilyTag::MnCmnStar { n, diamond } | FamilyTag::MnCmnDagger { n, diamond } => {
                if n == 0 {
                    return bad("need n >= 1".into());
                }
                if diamond == Diamond::S && n % 2 == 1 {
                    return bad(format!("symplectic involution needs even n, got {n}"));
                }
            }
            FamilyTag::MnCmnExc { n } => {
                if n == 0 {
                    return bad("need n >= 1".into());
                }
            }
        }
        Ok(())
    }

    /// Matrix size `s_k` used by the block-triangular construction.
    pub fn size(&self) -> usize {
        match *self {
            FamilyTag::MhlT { h, l } | FamilyTag::MhlExc { h, l } => h + l,
            FamilyTag::MhhS { h } => 2 * h,
            FamilyTag::MnCmnStar { n, .. }
            | FamilyTag::MnCmnDagger { n, .. }
            | FamilyTag::MnCmnExc { n } => 2 * n,
        }
    }

    /// Number of leading row indices of degree 0 in the elementary grading
    /// (`h` for the `M_{h,l}` families, `n` for the `M_n + cM_n` ones).
    pub fn even_rows(&self) -> usize {
        match *self {
            FamilyTag::MhlT { h, .. } | FamilyTag::MhlExc { h, .. } | FamilyTag::MhhS { h } => h,
            FamilyTag::MnCmnStar { n, .. }
            | FamilyTag::MnCmnDagger { n, .. }
            | FamilyTag::MnCmnExc { n } => n,
        }
    }

    /// The degree map `α_k` on `1..=size` (0-based here).
    pub fn alpha(&self, i: usize) -> u8 {
        u8::from(i >= self.even_rows())
    }

    pub fn dim(&self) -> usize {
        let s = self.size();
        match self {
            FamilyTag::MhlExc { .. } => 2 * s * s,
            FamilyTag::MnCmnExc { n } => 4 * n * n,
            FamilyTag::MnCmnStar { n, .. } | FamilyTag::MnCmnDagger { n, .. } => 2 * n * n,
            _ => s * s,
        }
    }

    /// True when the grading of the algebra is trivial.
    pub fn trivially_graded(&self) -> bool {
        matches!(self, FamilyTag::MhlT { l: 0, .. } | FamilyTag::MhlExc { l: 0, .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyTag::MhlT { .. } => "MHL_T",
            FamilyTag::MhhS { .. } => "MHH_S",
            FamilyTag::MhlExc { .. } => "MHL_EXC",
            FamilyTag::MnCmnStar { .. } => "MN_CMN_STAR",
            FamilyTag::MnCmnDagger { .. } => "MN_CMN_DAGGER",
            FamilyTag::MnCmnExc { .. } => "MN_CMN_EXC",
        }
    }

    pub fn params_json(&self) -> Value {
        match *self {
            FamilyTag::MhlT { h, l } | FamilyTag::MhlExc { h, l } => json!({"h": h, "l": l}),
            FamilyTag::MhhS { h } => json!({"h": h}),
            FamilyTag::MnCmnStar { n, diamond } | FamilyTag::MnCmnDagger { n, diamond } => {
                json!({"n": n, "diamond": diamond.as_str()})
            }
            FamilyTag::MnCmnExc { n } => json!({"n": n}),
        }
    }

    pub fn from_json(family: &str, params: &Map<String, Value>) -> Result<Self> {
        let num = |k: &str| -> Result<usize> {
            params
                .get(k)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| Error::Parse(format!("family {family}: missing integer {k:?}")))
        };
        let diamond = || -> Result<Diamond> {
            params
                .get("diamond")
                .and_then(Value::as_str)
                .map(Diamond::parse)
                .unwrap_or(Ok(Diamond::T))
        };
        let tag = match family {
            "MHL_T" => FamilyTag::MhlT { h: num("h")?, l: num("l")? },
            "MHH_S" => FamilyTag::MhhS { h: num("h")? },
            "MHL_EXC" => FamilyTag::MhlExc { h: num("h")?, l: num("l")? },
            "MN_CMN_STAR" => FamilyTag::MnCmnStar { n: num("n")?, diamond: diamond()? },
            "MN_CMN_DAGGER" => FamilyTag::MnCmnDagger { n: num("n")?, diamond: diamond()? },
            "MN_CMN_EXC" => FamilyTag::MnCmnExc { n: num("n")? },
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        tag.validate()?;
        Ok(tag)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyTag::MhlT { h, l } => write!(f, "MHL_T({h},{l})"),
            FamilyTag::MhhS { h } => write!(f, "MHH_S({h})"),
            FamilyTag::MhlExc { h, l } => write!(f, "MHL_EXC({h},{l})"),
            FamilyTag::MnCmnStar { n, diamond } => write!(f, "MN_CMN_STAR({n},{})", diamond.as_str()),
            FamilyTag::MnCmnDagger { n, diamond } => {
                write!(f, "MN_CMN_DAGGER({n},{})", diamond.as_str())
            }
            FamilyTag::MnCmnExc { n } => write!(f, "MN_CMN_EXC({n})"),
        }
    }
}

/// Parses the display form, e.g. `MHL_T(2,1)` or `MN_CMN_STAR(2,s)`.
impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a family like MHL_T(1,1), got {s:?}"));
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let args: Vec<&str> = rest.strip_suffix(')').ok_or_else(bad)?.split(',').map(str::trim).collect();
        let num = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        let tag = match name.trim() {
            "MHL_T" => {
                arity(2)?;
                FamilyTag::MhlT { h: num(0)?, l: num(1)? }
            }
            "MHH_S" => {
                arity(1)?;
                FamilyTag::MhhS { h: num(0)? }
            }
            "MHL_EXC" => {
                arity(2)?;
                FamilyTag::MhlExc { h: num(0)?, l: num(1)? }
            }
            "MN_CMN_STAR" | "MN_CMN_DAGGER" => {
                arity(2)?;
                let (n, diamond) = (num(0)?, Diamond::parse(args[1])?);
                if name.trim() == "MN_CMN_STAR" {
                    FamilyTag::MnCmnStar { n, diamond }
                } else {
                    FamilyTag::MnCmnDagger { n, diamond }
                }
            }
            "MN_CMN_EXC" => {
                arity(1)?;
                FamilyTag::MnCmnExc { n: num(0)? }
            }
            _ => return Err(bad()),
        };
        tag.validate()?;
        Ok(tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_checks() {
        assert!(FamilyTag::MhlT { h: 1, l: 0 }.validate().is_ok());
        assert!(FamilyTag::MhlT { h: 1, l: 2 }.validate().is_err());
        assert!(FamilyTag::MhhS { h: 0 }.validate().is_err());
        assert!(FamilyTag::MnCmnStar { n: 3, diamond: Diamond::S }.validate().is_err());
        assert!(FamilyTag::MnCmnDagger { n: 2, diamond: Diamond::S }.validate().is_ok());
    }

    #[test]
    fn json_round_trip() {
        let tags = [
            FamilyTag::MhlT { h: 2, l: 1 },
            FamilyTag::MhhS { h: 2 },
            FamilyTag::MhlExc { h: 1, l: 1 },
            FamilyTag::MnCmnStar { n: 2, diamond: Diamond::S },
            FamilyTag::MnCmnDagger { n: 1, diamond: Diamond::T },
            FamilyTag::MnCmnExc { n: 2 },
        ];
        for t in tags {
            let p = t.params_json();
            let back = FamilyTag::from_json(t.name(), p.as_object().unwrap()).unwrap();
            assert_eq!(back, t);
            assert_eq!(t.to_string().parse::<FamilyTag>().unwrap(), t);
        }
        assert!("MHL_T(1)".parse::<FamilyTag>().is_err());
        assert!("MHL_T(0,0)".parse::<FamilyTag>().is_err());
        assert!("FOO(1)".parse::<FamilyTag>().is_err());
    }
}
