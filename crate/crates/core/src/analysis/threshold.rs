use super::bases::EvalBases;
use super::identity::capelli_identity_with;
use super::{AnalysisConfig, Witness};
use crate::algebra::StarSuperAlgebra;
use crate::error::{Error, Result};
use crate::polynomials::{barred_capelli_set, CapelliSpec, VarKind};

/// Smallest rank at which the Capelli generators of a kind are identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub kind: VarKind,
    pub threshold: usize,
    pub search_cap: usize,
    /// Whether the whole barred set was required.
    pub barred: bool,
    /// A non-identity at rank `threshold − 1` (absent when the threshold is 1).
    pub witness: Option<Witness>,
}

/// Smallest `m ≤ cap` such that every member of the barred Capelli set of
/// rank `m` in the given kind is an identity (only the undeleted member when
/// `cfg.barred` is false). Every rank up to `cap` is checked, and a
/// non-identity above the threshold is reported as an internal error.
pub fn capelli_threshold(
    alg: &StarSuperAlgebra,
    kind: VarKind,
    cap: usize,
    cfg: &AnalysisConfig,
) -> Result<ThresholdReport> {
    if cap == 0 {
        return Err(Error::InvalidParameter("threshold search cap must be at least 1".into()));
    }
    let bases = EvalBases::new(alg);
    let mut threshold = None;
    let mut witness = None;
    for m in 1..=cap {
        let members = if cfg.barred {
            barred_capelli_set(m, kind)?.members().to_vec()
        } else {
            vec![CapelliSpec::full(m, kind)?]
        };
        let mut failing = None;
        for spec in &members {
            let r = capelli_identity_with(alg, &bases, spec, cfg)?;
            if !r.is_identity {
                failing = r.witness;
                break;
            }
        }
        match (threshold, failing) {
            (None, None) => threshold = Some(m),
            (None, Some(w)) => witness = Some(w),
            (Some(t), Some(w)) => {
                return Err(Error::Internal(format!(
                    "{} is an identity at rank {t} but not at rank {m}",
                    w.poly.describe()
                )))
            }
            (Some(_), None) => {}
        }
        if threshold.is_some() && m > bases.basis(kind).len() {
            // every larger rank alternates more entries than the component's dimension
            break;
        }
    }
    let threshold = threshold.ok_or(Error::ThresholdNotFound { cap })?;
    Ok(ThresholdReport { kind, threshold, search_cap: cap, barred: cfg.barred, witness })
}

/// Threshold of the ungraded Capelli generators (alternating slots of kind
/// `ANY`).
pub fn ordinary_capelli_threshold(
    alg: &StarSuperAlgebra,
    cap: usize,
    cfg: &AnalysisConfig,
) -> Result<ThresholdReport> {
    capelli_threshold(alg, VarKind::Any, cap, cfg)
}
