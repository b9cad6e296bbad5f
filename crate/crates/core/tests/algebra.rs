use superpi_core::constructions::{build_family, m_hl_transpose};
use superpi_core::rational::{rat, unit_vec};
use superpi_core::{
    center, is_star_graded_simple, jacobson_radical, FamilyTag, Rational, StarSuperAlgebra,
    ViolationKind, WedderburnBlock, WedderburnData,
};

type Entries = Vec<(usize, usize, usize, Rational)>;

/// Rebuilds `alg` after editing its raw data.
fn rebuild(
    alg: &StarSuperAlgebra,
    edit: impl FnOnce(&mut Entries, &mut Vec<u8>, &mut Vec<Vec<Rational>>),
) -> StarSuperAlgebra {
    let mut structure = alg.structure_entries();
    let mut grading = alg.grading().to_vec();
    let mut star: Vec<Vec<Rational>> = (0..alg.dim()).map(|k| alg.star_image(k).to_vec()).collect();
    edit(&mut structure, &mut grading, &mut star);
    StarSuperAlgebra::new(alg.labels().to_vec(), structure, grading, star, alg.wedderburn().cloned()).unwrap()
}

#[test]
fn families_validate() {
    for tag in [
        FamilyTag::MhlT { h: 2, l: 1 },
        FamilyTag::MhhS { h: 1 },
        FamilyTag::MhlExc { h: 1, l: 1 },
        FamilyTag::MnCmnExc { n: 1 },
    ] {
        let a = build_family(tag).unwrap();
        let report = a.validate();
        assert!(report.is_empty(), "{tag}: {report}");
    }
}

#[test]
fn scaled_involution_is_not_of_order_two() {
    let a = m_hl_transpose(1, 1).unwrap();
    // e12 ↦ 2 e21 while e21 ↦ e12
    let b = rebuild(&a, |_, _, star| star[1] = vec![rat(0), rat(0), rat(2), rat(0)]);
    let report = b.validate();
    assert!(report.contains(ViolationKind::InvolutionOrder));
    assert_eq!(report.get(ViolationKind::InvolutionOrder).unwrap().witness, vec![1]);
    assert!(!report.contains(ViolationKind::Associativity));
}

#[test]
fn flipped_grading_bit() {
    let a = m_hl_transpose(1, 1).unwrap();
    let b = rebuild(&a, |_, g, _| g[1] = 0);
    let report = b.validate();
    assert!(report.contains(ViolationKind::GradingCompatibility));
    assert!(report.contains(ViolationKind::InvolutionGrading));
}

#[test]
fn perturbed_product_breaks_associativity() {
    let a = m_hl_transpose(1, 1).unwrap();
    // e11 e11 = 2 e11
    let b = rebuild(&a, |s, _, _| s.push((0, 0, 0, rat(1))));
    assert!(b.validate().contains(ViolationKind::Associativity));
}

#[test]
fn wedderburn_data_is_checked() {
    let a = m_hl_transpose(1, 1).unwrap();
    let overlapping = WedderburnData {
        blocks: vec![WedderburnBlock { indices: vec![0, 1, 2, 3], family: None }],
        radical: vec![3],
    };
    let report = a.clone().with_wedderburn(Some(overlapping)).validate();
    assert!(report.contains(ViolationKind::WedderburnPartition));
    let not_closed = WedderburnData {
        blocks: vec![
            WedderburnBlock { indices: vec![0, 1], family: None },
            WedderburnBlock { indices: vec![2, 3], family: None },
        ],
        radical: vec![],
    };
    assert!(a.with_wedderburn(Some(not_closed)).validate().contains(ViolationKind::WedderburnBlock));
}

#[test]
fn products_and_involution() {
    let a = m_hl_transpose(1, 1).unwrap();
    let e = |i| unit_vec(4, i);
    // e12 e21 = e11, star(e12) = e21
    assert_eq!(a.multiply(&e(1), &e(2)).unwrap(), e(0));
    assert_eq!(a.star(&e(1)).unwrap(), e(2));
    assert!(a.multiply(&e(1), &[rat(1)]).is_err());
    assert_eq!(a.unit().unwrap(), vec![rat(1), rat(0), rat(0), rat(1)]);
    assert_eq!(a.degree_of(&e(1)), Some(1));
    assert_eq!(a.degree_of(&[rat(1), rat(1), rat(0), rat(0)]), None);
}

#[test]
fn simple_and_direct_sum() {
    let a = m_hl_transpose(1, 1).unwrap();
    assert!(is_star_graded_simple(&a).unwrap());
    assert_eq!(center(&a).dim(), 1);
    assert!(jacobson_radical(&a).unwrap().is_zero());
    let s = a.direct_sum(&a);
    assert_eq!(s.dim(), 8);
    assert!(s.validate().is_empty());
    assert!(!is_star_graded_simple(&s).unwrap());
    assert_eq!(center(&s).dim(), 2);
    // exc is simple as a superalgebra with involution but not as an algebra
    let exc = build_family(FamilyTag::MhlExc { h: 1, l: 0 }).unwrap();
    assert!(is_star_graded_simple(&exc).unwrap());
    assert_eq!(center(&exc).dim(), 2);
}
