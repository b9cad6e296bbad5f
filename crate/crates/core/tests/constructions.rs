use superpi_core::constructions::{
    commutative_nilpotent, hom_dims, m_hh_symplectic, m_hl_exchange, m_hl_transpose, mn_cmn,
    mn_cmn_exchange, noncommutative_nilpotent, one_sided_radical_extension,
    tensor_nilpotent_extension, ut_star, Sign, UtSpec,
};
use superpi_core::{
    is_star_graded_simple, jacobson_radical, peirce_decompose, radical_centralizer, Diamond,
    FamilyTag, Subspace,
};

fn mhlt(h: usize, l: usize) -> FamilyTag {
    FamilyTag::MhlT { h, l }
}

#[test]
fn hom_dims_of_named_examples() {
    assert_eq!(hom_dims(&m_hl_transpose(2, 1).unwrap()), [4, 1, 2, 2]);
    assert_eq!(hom_dims(&m_hl_transpose(1, 0).unwrap()), [1, 0, 0, 0]);
    assert_eq!(hom_dims(&m_hl_transpose(1, 1).unwrap()), [2, 0, 1, 1]);
    assert_eq!(hom_dims(&m_hh_symplectic(2).unwrap()), [4, 4, 2, 6]);
    assert_eq!(hom_dims(&m_hl_exchange(1, 1).unwrap()), [2, 2, 2, 2]);
    assert_eq!(hom_dims(&mn_cmn_exchange(1).unwrap()), [1, 1, 1, 1]);
    assert_eq!(hom_dims(&mn_cmn_exchange(2).unwrap()), [4, 4, 4, 4]);
    assert_eq!(hom_dims(&mn_cmn(2, Diamond::S, Sign::Plus).unwrap()), [1, 3, 1, 3]);
    assert_eq!(hom_dims(&mn_cmn(2, Diamond::S, Sign::Minus).unwrap()), [1, 3, 3, 1]);
}

#[test]
fn simplicity() {
    assert!(is_star_graded_simple(&m_hl_transpose(2, 1).unwrap()).unwrap());
    assert!(is_star_graded_simple(&m_hl_exchange(1, 1).unwrap()).unwrap());
    assert!(is_star_graded_simple(&mn_cmn_exchange(1).unwrap()).unwrap());
    assert!(is_star_graded_simple(&mn_cmn(1, Diamond::T, Sign::Minus).unwrap()).unwrap());
    let f = m_hl_transpose(1, 0).unwrap();
    assert!(!is_star_graded_simple(&f.direct_sum(&f)).unwrap());
}

#[test]
fn ut_of_two_fields() {
    let ut = ut_star(&UtSpec::new(vec![mhlt(1, 0), mhlt(1, 0)], vec![0, 0]).unwrap()).unwrap();
    let a = &ut.algebra;
    assert_eq!(a.dim(), 4);
    let w = a.wedderburn().unwrap();
    assert_eq!(w.radical.len(), 2);
    assert_eq!(ut.matrices[w.radical[0]].keys().copied().collect::<Vec<_>>(), vec![(0, 1)]);
    assert_eq!(ut.matrices[w.radical[1]].keys().copied().collect::<Vec<_>>(), vec![(2, 3)]);
    assert_eq!(jacobson_radical(a).unwrap(), w.radical_span(a.dim()));
    // the two diagonal blocks annihilate each other
    let b0 = w.block_span(a.dim(), 0);
    let b1 = w.block_span(a.dim(), 1);
    assert!(a.subspace_product(&b0, &b1).unwrap().is_zero());
}

#[test]
fn ut_grid_builds() {
    let tags = [
        mhlt(1, 1),
        FamilyTag::MhhS { h: 1 },
        FamilyTag::MhlExc { h: 1, l: 0 },
        FamilyTag::MnCmnStar { n: 1, diamond: Diamond::T },
        FamilyTag::MnCmnDagger { n: 2, diamond: Diamond::S },
        FamilyTag::MnCmnExc { n: 1 },
    ];
    for &a in &tags {
        for &b in &tags {
            for g in [[0, 0], [0, 1]] {
                let ut = ut_star(&UtSpec::new(vec![a, b], g.to_vec()).unwrap()).unwrap();
                let pd = peirce_decompose(&ut.algebra).unwrap();
                let rad = ut.algebra.wedderburn().unwrap().radical.len();
                assert_eq!(pd.dims(), [rad, 0, 0, 0], "{a} {b} {g:?}");
                assert_eq!(radical_centralizer(&ut.algebra).unwrap().dim(), 0);
            }
        }
    }
}

#[test]
fn ut_dims_for_two_small_matrix_blocks() {
    let ut = ut_star(&UtSpec::new(vec![mhlt(1, 1), mhlt(1, 1)], vec![0, 0]).unwrap()).unwrap();
    assert_eq!(ut.algebra.dim(), 16);
    assert_eq!(hom_dims(&ut.algebra)[0], 6);
}

#[test]
fn one_sided_extension_peirce() {
    let a = m_hl_transpose(1, 1).unwrap();
    let r = one_sided_radical_extension(&a).unwrap();
    assert!(r.validate().is_empty());
    let d = a.dim();
    let pd = peirce_decompose(&r).unwrap();
    assert_eq!(pd.j10, Subspace::from_indices(3 * d, d..2 * d));
    assert_eq!(pd.j01, Subspace::from_indices(3 * d, 2 * d..3 * d));
    assert!(pd.j11.is_zero() && pd.j00.is_zero());
    assert_eq!(jacobson_radical(&r).unwrap().dim(), 2 * d);
}

#[test]
fn tensor_extensions() {
    let a = m_hl_transpose(1, 1).unwrap();
    let r = tensor_nilpotent_extension(&a, &commutative_nilpotent(1).unwrap()).unwrap();
    assert_eq!(r.dim(), 8);
    assert_eq!(peirce_decompose(&r).unwrap().dims(), [4, 0, 0, 0]);
    assert_eq!(radical_centralizer(&r).unwrap().dim(), 1);
    let r = tensor_nilpotent_extension(&a, &noncommutative_nilpotent().unwrap()).unwrap();
    assert_eq!(r.dim(), 20);
    assert_eq!(radical_centralizer(&r).unwrap().dim(), 4);
}

#[test]
fn extension_rejects_non_simple_base() {
    let f = m_hl_transpose(1, 0).unwrap();
    assert!(one_sided_radical_extension(&f.direct_sum(&f)).is_err());
}
