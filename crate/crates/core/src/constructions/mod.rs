//! Constructors for the simple families, block-triangular algebras and
//! radical extensions.

mod extensions;
mod families;
mod ut;

pub use extensions::{
    commutative_nilpotent, noncommutative_nilpotent, one_sided_radical_extension,
    tensor_nilpotent_extension, NilpotentSpec,
};
pub use families::{
    build_family, hom_dims, m_hh_symplectic, m_hl_exchange, m_hl_transpose, mn_cmn,
    mn_cmn_exchange, Sign,
};
pub use ut::{ut_star, UtLayout, UtSpec, UtStar};
