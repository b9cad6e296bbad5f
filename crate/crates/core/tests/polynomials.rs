use superpi_core::constructions::m_hl_transpose;
use superpi_core::polynomials::{barred_capelli_set, CapelliSpec};
use superpi_core::rational::{rat, unit_vec};
use superpi_core::{
    capelli_graded, capelli_ordinary, evaluate, evaluate_alternating_fast, gamma_generators,
    MultilinearPoly, VarKind,
};

#[test]
fn capelli_of_rank_two() {
    let p = capelli_ordinary(2).unwrap();
    // slots t1, t2, x1: t1 x1 t2 - t2 x1 t1
    assert_eq!(p.num_slots(), 3);
    assert_eq!(p.num_terms(), 2);
    assert_eq!(p.coefficient(&[0, 2, 1]), rat(1));
    assert_eq!(p.coefficient(&[1, 2, 0]), rat(-1));
    assert_eq!(capelli_ordinary(4).unwrap().num_terms(), 24);
    assert!(capelli_graded(2, VarKind::Any).is_err());
    assert_eq!(capelli_graded(3, VarKind::ZMinus).unwrap().slot_kinds()[0], VarKind::ZMinus);
}

#[test]
fn swapping_alternating_slots_negates() {
    let p = capelli_ordinary(3).unwrap();
    assert_eq!(p.swap_slots(0, 2), p.neg());
    assert_ne!(p.swap_slots(3, 4), p.neg());
}

#[test]
fn barred_sets() {
    for m in 1..=5 {
        let set = barred_capelli_set(m, VarKind::YPlus).unwrap();
        assert_eq!(set.len(), 1 << (m - 1));
        assert_eq!(set.members()[0], CapelliSpec::full(m, VarKind::YPlus).unwrap());
    }
    let all = CapelliSpec::new(3, VarKind::YMinus, &[0, 1]).unwrap();
    assert_eq!(all.num_slots(), 3);
    // with every x deleted the member is the standard polynomial
    let s3 = all.materialize();
    assert_eq!(s3.num_terms(), 6);
    assert_eq!(s3.coefficient(&[1, 0, 2]), rat(-1));
    assert_eq!(all.to_string(), "Cap3[YMINUS] without x1,x2");
    assert!(CapelliSpec::new(2, VarKind::Any, &[1]).is_err());
    assert!(barred_capelli_set(0, VarKind::Any).is_err());
}

#[test]
fn gamma_generator_counts() {
    let g = gamma_generators(1, 1, 1, 1).unwrap();
    assert_eq!(g.len(), 4);
    let kinds: Vec<VarKind> = g.members().iter().map(|s| s.kind()).collect();
    assert_eq!(kinds, VarKind::GRADED.to_vec());
    assert_eq!(gamma_generators(3, 1, 2, 2).unwrap().len(), 4 + 1 + 2 + 2);
    assert_eq!(g.polys().len(), 4);
}

#[test]
fn rank_two_capelli_on_two_by_two_matrices() {
    let m2 = m_hl_transpose(2, 0).unwrap();
    let e = |i| unit_vec(4, i);
    // t1 = e11, t2 = e22, x = e12: e11 e12 e22 - e22 e12 e11 = e12
    let assignment = vec![e(0), e(3), e(1)];
    let p = capelli_ordinary(2).unwrap();
    assert_eq!(evaluate(&m2, &p, &assignment).unwrap(), e(1));
    let spec = CapelliSpec::full(2, VarKind::Any).unwrap();
    assert_eq!(evaluate_alternating_fast(&m2, &spec, &assignment).unwrap(), e(1));
    assert!(evaluate(&m2, &p, &assignment[..2]).is_err());
}

#[test]
fn explicit_polynomials() {
    let mut p = MultilinearPoly::new(vec![VarKind::YPlus, VarKind::ZMinus]);
    p.add_term(vec![0, 1], rat(2)).unwrap();
    p.add_term(vec![1, 0], rat(-1)).unwrap();
    assert!(p.add_term(vec![0, 0], rat(1)).is_err());
    assert!(p.add_term(vec![0], rat(1)).is_err());
    p.add_term(vec![0, 1], rat(-2)).unwrap();
    assert_eq!(p.num_terms(), 1);
    assert!(!p.is_zero());
    assert_eq!(p.neg().coefficient(&[1, 0]), rat(1));
}
