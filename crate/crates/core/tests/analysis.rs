use superpi_core::analysis::{evaluation_matrix, WitnessPoly};
use superpi_core::constructions::{
    m_hl_exchange, m_hl_transpose, mn_cmn, one_sided_radical_extension, ut_star, Sign, UtSpec,
};
use superpi_core::linalg::matrix_rank;
use superpi_core::polynomials::{barred_capelli_set, CapelliSpec, MultilinearPoly};
use superpi_core::rational::rat;
use superpi_core::{
    admissible_exponent, capelli_threshold, codim_graded, codim_ordinary, gamma_generators,
    is_capelli_identity, is_graded_identity, is_reduced, kind_vector_rank,
    ordinary_capelli_threshold, satisfies_generator_set, AnalysisConfig, Diamond, Error,
    FamilyTag, VarKind,
};

fn cfg() -> AnalysisConfig {
    AnalysisConfig::default()
}

#[test]
fn commutator_of_symmetric_elements_vanishes_on_a_field() {
    let f = m_hl_transpose(1, 0).unwrap();
    let mut p = MultilinearPoly::new(vec![VarKind::YPlus, VarKind::YPlus]);
    p.add_term(vec![0, 1], rat(1)).unwrap();
    p.add_term(vec![1, 0], rat(-1)).unwrap();
    assert!(is_graded_identity(&f, &p, &cfg()).unwrap().is_identity);
    let m = m_hl_transpose(1, 1).unwrap();
    let r = is_graded_identity(&m, &p, &cfg()).unwrap();
    // symmetric even elements of M_{1,1} are the diagonal matrices
    assert!(r.is_identity);
}

#[test]
fn capelli_identity_examples() {
    let a = m_hl_transpose(1, 1).unwrap();
    let r = is_capelli_identity(&a, &CapelliSpec::full(2, VarKind::YPlus).unwrap(), &cfg()).unwrap();
    assert!(!r.is_identity);
    let w = r.witness.unwrap();
    assert!(w.verify(&a));
    assert!(matches!(w.poly, WitnessPoly::Capelli(_)));
    let r = is_capelli_identity(&a, &CapelliSpec::full(3, VarKind::YPlus).unwrap(), &cfg()).unwrap();
    assert!(r.is_identity);
}

#[test]
fn exhaustive_stage_finds_witnesses_alone() {
    let a = m_hl_transpose(1, 1).unwrap();
    let c = AnalysisConfig { random_trials: 0, structured_budget: 0, ..cfg() };
    for spec in barred_capelli_set(2, VarKind::YPlus).unwrap().members() {
        let r = is_capelli_identity(&a, spec, &c).unwrap();
        let full = is_capelli_identity(&a, spec, &cfg()).unwrap();
        assert_eq!(r.is_identity, full.is_identity, "{spec}");
        if let Some(w) = r.witness {
            assert!(w.verify(&a));
        }
    }
}

#[test]
fn thresholds_of_small_matrix_algebra() {
    let a = m_hl_transpose(1, 1).unwrap();
    let t = capelli_threshold(&a, VarKind::YPlus, 8, &cfg()).unwrap();
    assert_eq!(t.threshold, 3);
    assert!(t.witness.unwrap().verify(&a));
    let t = capelli_threshold(&a, VarKind::YMinus, 8, &cfg()).unwrap();
    assert_eq!(t.threshold, 1);
    assert!(t.witness.is_none());
    assert_eq!(
        capelli_threshold(&a, VarKind::YPlus, 2, &cfg()).unwrap_err(),
        Error::ThresholdNotFound { cap: 2 }
    );
}

#[test]
fn ordinary_thresholds() {
    assert_eq!(ordinary_capelli_threshold(&m_hl_transpose(1, 0).unwrap(), 4, &cfg()).unwrap().threshold, 2);
    assert_eq!(ordinary_capelli_threshold(&m_hl_transpose(1, 1).unwrap(), 7, &cfg()).unwrap().threshold, 5);
}

#[test]
fn generator_sets() {
    let a = m_hl_transpose(1, 1).unwrap();
    let gens = gamma_generators(3, 1, 2, 2).unwrap();
    assert!(satisfies_generator_set(&a, &gens, &cfg()).unwrap().is_identity);
    let small = gamma_generators(1, 1, 1, 1).unwrap();
    assert!(!satisfies_generator_set(&a, &small, &cfg()).unwrap().is_identity);
    let r = one_sided_radical_extension(&a).unwrap();
    let rep = satisfies_generator_set(&r, &gens, &cfg()).unwrap();
    assert!(!rep.is_identity);
    assert!(rep.witness.unwrap().verify(&r));
}

#[test]
fn codimension_examples() {
    let a = m_hl_transpose(1, 1).unwrap();
    assert_eq!(codim_graded(&a, 1, &cfg()).unwrap().value, 3);
    let f = m_hl_transpose(1, 0).unwrap();
    for n in 1..=4 {
        assert_eq!(codim_graded(&f, n, &cfg()).unwrap().value, 1);
        assert_eq!(codim_ordinary(&f, n, &cfg()).unwrap(), 1);
    }
    assert_eq!(codim_ordinary(&a, 2, &cfg()).unwrap(), 2);
    assert!(matches!(codim_graded(&a, 7, &cfg()), Err(Error::CapExceeded { .. })));
}

#[test]
fn rank_agrees_with_full_matrix() {
    let a = mn_cmn(1, Diamond::T, Sign::Minus).unwrap();
    for kinds in [vec![VarKind::YPlus, VarKind::ZMinus], vec![VarKind::Any, VarKind::Any, VarKind::Any]] {
        let m = evaluation_matrix(&a, &kinds, &cfg()).unwrap();
        assert_eq!(matrix_rank(&m), kind_vector_rank(&a, &kinds, &cfg()).unwrap());
    }
}

#[test]
fn mod_p_screening_agrees() {
    let a = m_hl_transpose(1, 1).unwrap();
    let c = AnalysisConfig { mod_p: Some(2_147_483_647), ..cfg() };
    assert_eq!(codim_graded(&a, 3, &c).unwrap(), codim_graded(&a, 3, &cfg()).unwrap());
    let t = capelli_threshold(&a, VarKind::ZPlus, 4, &c).unwrap();
    assert_eq!(t.threshold, 2);
}

#[test]
fn exponents() {
    let a = m_hl_exchange(1, 1).unwrap();
    assert_eq!(admissible_exponent(&a).unwrap(), 8);
    assert!(is_reduced(&a).unwrap());
    let b = m_hl_transpose(1, 1).unwrap();
    let s = a.direct_sum(&b);
    assert_eq!(admissible_exponent(&s).unwrap(), 8);
    assert!(!is_reduced(&s).unwrap());
    let t = FamilyTag::MhlT { h: 1, l: 1 };
    let ut = ut_star(&UtSpec::new(vec![t, t], vec![0, 0]).unwrap()).unwrap();
    assert_eq!(admissible_exponent(&ut.algebra).unwrap(), 8);
    assert!(is_reduced(&ut.algebra).unwrap());
}
