//! Multilinear polynomials in graded symmetric/skew variables, Capelli
//! polynomials and their evaluation.

mod capelli;
mod poly;

pub use capelli::{
    barred_capelli_set, capelli_graded, capelli_ordinary, evaluate_alternating_fast,
    gamma_generators, CapelliSpec, GeneratorSet,
};
pub(crate) use capelli::capelli_dp;
pub use poly::{evaluate, MultilinearPoly};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Kind of a variable slot: symmetric/skew of even/odd degree, or an
/// unrestricted `x` slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    YPlus,
    YMinus,
    ZPlus,
    ZMinus,
    Any,
}

impl VarKind {
    /// The four graded kinds in the order `Y⁺, Y⁻, Z⁺, Z⁻`.
    pub const GRADED: [VarKind; 4] = [VarKind::YPlus, VarKind::YMinus, VarKind::ZPlus, VarKind::ZMinus];

    /// Position in [`Self::GRADED`]; `None` for `Any`.
    pub fn index(self) -> Option<usize> {
        VarKind::GRADED.iter().position(|&k| k == self)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VarKind::YPlus => "YPLUS",
            VarKind::YMinus => "YMINUS",
            VarKind::ZPlus => "ZPLUS",
            VarKind::ZMinus => "ZMINUS",
            VarKind::Any => "ANY",
        }
    }

    /// Short symbol used when printing polynomials.
    pub fn symbol(self) -> &'static str {
        match self {
            VarKind::YPlus => "y+",
            VarKind::YMinus => "y-",
            VarKind::ZPlus => "z+",
            VarKind::ZMinus => "z-",
            VarKind::Any => "x",
        }
    }
}

impl fmt::Display for VarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "YPLUS" | "Y+" => Ok(VarKind::YPlus),
            "YMINUS" | "Y-" => Ok(VarKind::YMinus),
            "ZPLUS" | "Z+" => Ok(VarKind::ZPlus),
            "ZMINUS" | "Z-" => Ok(VarKind::ZMinus),
            "ANY" | "X" => Ok(VarKind::Any),
            _ => Err(Error::Parse(format!("unknown variable kind '{s}'"))),
        }
    }
}
