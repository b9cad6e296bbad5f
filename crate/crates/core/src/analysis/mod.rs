//! Identity testing, Capelli thresholds, codimensions and exponents.

mod bases;
mod codim;
mod exponent;
mod identity;
mod threshold;

pub use bases::EvalBases;
pub use codim::{
    codim_graded, codim_ordinary, codim_table, evaluation_matrix, kind_contents,
    kind_vector_rank, CodimReport, CodimRow,
};
pub use exponent::{admissible_exponent, is_reduced};
pub use identity::{is_capelli_identity, is_graded_identity, satisfies_generator_set};
pub use threshold::{capelli_threshold, ordinary_capelli_threshold, ThresholdReport};

use crate::algebra::StarSuperAlgebra;
use crate::error::Result;
use crate::polynomials::{evaluate, evaluate_alternating_fast, CapelliSpec, MultilinearPoly};
use crate::rational::{is_zero_vec, Rational};

/// Search limits and knobs shared by the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Largest codimension degree computed without refusing.
    pub cap_n: usize,
    /// Largest nominal enumeration size (assignments or tuple×monomial
    /// products) attempted without refusing.
    pub cap_evals: u128,
    /// When set, exhaustive identity checks and ranks are repeated modulo
    /// this prime and any disagreement is reported as an internal error.
    pub mod_p: Option<u64>,
    /// Seed of the randomized witness search.
    pub seed: u64,
    /// Number of random assignments tried before exhaustive search.
    pub random_trials: usize,
    /// Leaf budget of the structured witness search.
    pub structured_budget: usize,
    /// Thresholds require the whole barred set (`true`) or only the
    /// undeleted Capelli polynomial (`false`).
    pub barred: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            cap_n: 6,
            cap_evals: 100_000_000,
            mod_p: None,
            seed: 0,
            random_trials: 16,
            structured_budget: 2_000,
            barred: true,
        }
    }
}

/// The polynomial a witness refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessPoly {
    Capelli(CapelliSpec),
    General(MultilinearPoly),
}

impl WitnessPoly {
    pub fn describe(&self) -> String {
        match self {
            WitnessPoly::Capelli(s) => s.to_string(),
            WitnessPoly::General(p) => p.to_string(),
        }
    }

    pub fn evaluate(&self, alg: &StarSuperAlgebra, assignment: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        match self {
            WitnessPoly::Capelli(s) => evaluate_alternating_fast(alg, s, assignment),
            WitnessPoly::General(p) => evaluate(alg, p, assignment),
        }
    }
}

/// An assignment on which a polynomial does not vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub poly: WitnessPoly,
    pub assignment: Vec<Vec<Rational>>,
    pub output: Vec<Rational>,
}

impl Witness {
    /// Re-evaluates and checks that the stored nonzero output is reproduced.
    pub fn verify(&self, alg: &StarSuperAlgebra) -> bool {
        !is_zero_vec(&self.output)
            && self.poly.evaluate(alg, &self.assignment).is_ok_and(|v| v == self.output)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub is_identity: bool,
    pub witness: Option<Witness>,
}

impl WitnessReport {
    pub fn identity() -> Self {
        WitnessReport { is_identity: true, witness: None }
    }

    pub fn violated(w: Witness) -> Self {
        WitnessReport { is_identity: false, witness: Some(w) }
    }
}
