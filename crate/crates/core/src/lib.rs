//! Exact computations with finite-dimensional superalgebras with graded
//! involution: construction of the simple families and block-triangular
//! algebras, Capelli polynomials, identity testing, codimensions and
//! exponents.

pub mod algebra;
pub mod analysis;
pub mod constructions;
pub mod arith;
pub mod error;
pub mod family;
pub mod format;
pub mod linalg;
pub mod lowered;
pub mod polynomials;
pub mod radical;
pub mod rational;
pub mod subspace;

pub use algebra::{
    HomComponents, StarSuperAlgebra, ValidationReport, Violation, ViolationKind, WedderburnBlock,
    WedderburnData,
};
pub use error::{Error, Result};
pub use family::{Diamond, FamilyTag};
pub use format::{from_json, to_json};
pub use polynomials::{
    barred_capelli_set, capelli_graded, capelli_ordinary, evaluate, evaluate_alternating_fast,
    gamma_generators, CapelliSpec, GeneratorSet, MultilinearPoly, VarKind,
};
pub use radical::{
    center, is_star_graded_simple, jacobson_radical, peirce_decompose, radical_centralizer,
    PeirceDecomposition,
};
pub use rational::Rational;
pub use subspace::Subspace;
pub use analysis::{
    admissible_exponent, capelli_threshold, codim_graded, codim_ordinary, codim_table,
    is_capelli_identity, is_graded_identity, is_reduced, kind_vector_rank,
    ordinary_capelli_threshold, satisfies_generator_set, AnalysisConfig, CodimReport,
    ThresholdReport, Witness, WitnessReport,
};
