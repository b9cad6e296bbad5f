use proptest::prelude::*;

use superpi_core::constructions::build_family;
use superpi_core::linalg::{matrix_rank, rank_mod_p};
use superpi_core::polynomials::CapelliSpec;
use superpi_core::rational::rat;
use superpi_core::{
    evaluate, evaluate_alternating_fast, from_json, to_json, Diamond, FamilyTag, Rational,
    StarSuperAlgebra, Subspace, VarKind,
};

fn small_families() -> impl Strategy<Value = FamilyTag> {
    prop_oneof![
        Just(FamilyTag::MhlT { h: 1, l: 0 }),
        Just(FamilyTag::MhlT { h: 1, l: 1 }),
        Just(FamilyTag::MhlT { h: 2, l: 0 }),
        Just(FamilyTag::MhhS { h: 1 }),
        Just(FamilyTag::MhlExc { h: 1, l: 1 }),
        Just(FamilyTag::MnCmnStar { n: 1, diamond: Diamond::T }),
        Just(FamilyTag::MnCmnDagger { n: 2, diamond: Diamond::S }),
        Just(FamilyTag::MnCmnExc { n: 1 }),
    ]
}

fn vector(d: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-4i64..=4, d).prop_map(|v| v.into_iter().map(rat).collect())
}

/// An algebra together with `k` random vectors in it.
fn algebra_with(k: usize) -> impl Strategy<Value = (StarSuperAlgebra, Vec<Vec<Rational>>)> {
    small_families().prop_flat_map(move |t| {
        let a = build_family(t).unwrap();
        let d = a.dim();
        (Just(a), prop::collection::vec(vector(d), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_rank_matches_rank_mod_large_prime(
        rows in prop::collection::vec(prop::collection::vec(-10i64..=10, 5), 1..6)
    ) {
        // entries are small enough that no 5×5 minor is divisible by p
        let m: Vec<Vec<Rational>> = rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect();
        prop_assert_eq!(matrix_rank(&m), rank_mod_p(&m, 1_000_000_007).unwrap());
    }

    #[test]
    fn star_is_an_involutive_antiautomorphism((a, v) in algebra_with(2)) {
        let (x, y) = (&v[0], &v[1]);
        prop_assert_eq!(&a.star(&a.star(x).unwrap()).unwrap(), x);
        let lhs = a.star(&a.multiply(x, y).unwrap()).unwrap();
        let rhs = a.multiply(&a.star(y).unwrap(), &a.star(x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneous_components_span_the_algebra(t in small_families()) {
        let a = build_family(t).unwrap();
        let h = a.hom_components();
        prop_assert_eq!(h.dims().iter().sum::<usize>(), a.dim());
        let mut sum = Subspace::zero(a.dim());
        for kind in VarKind::GRADED {
            sum = sum.sum(h.component(kind).unwrap()).unwrap();
        }
        prop_assert_eq!(sum, Subspace::full(a.dim()));
    }

    #[test]
    fn subspace_products_associate((a, v) in algebra_with(6)) {
        let d = a.dim();
        let u = Subspace::span(d, v[0..2].to_vec());
        let w = Subspace::span(d, v[2..4].to_vec());
        let z = Subspace::span(d, v[4..6].to_vec());
        let left = a.subspace_product(&a.subspace_product(&u, &w).unwrap(), &z).unwrap();
        let right = a.subspace_product(&u, &a.subspace_product(&w, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn capelli_alternates_and_fast_matches_naive(
        (a, v) in algebra_with(7),
        m in 2usize..=4,
        mask in 0u32..8,
        swap in (0usize..4, 0usize..4),
    ) {
        let deleted: Vec<usize> = (0..m - 1).filter(|g| mask >> g & 1 == 1).collect();
        let spec = CapelliSpec::new(m, VarKind::Any, &deleted).unwrap();
        let assignment: Vec<Vec<Rational>> = v[..spec.num_slots()].to_vec();
        let fast = evaluate_alternating_fast(&a, &spec, &assignment).unwrap();
        prop_assert_eq!(&fast, &evaluate(&a, &spec.materialize(), &assignment).unwrap());
        let (i, j) = (swap.0 % m, swap.1 % m);
        prop_assume!(i != j);
        let mut swapped = assignment.clone();
        swapped.swap(i, j);
        let neg: Vec<Rational> = fast.iter().map(|c| -c).collect();
        prop_assert_eq!(evaluate_alternating_fast(&a, &spec, &swapped).unwrap(), neg);
    }

    #[test]
    fn interchange_round_trip(t in small_families()) {
        let a = build_family(t).unwrap();
        prop_assert_eq!(from_json(&to_json(&a)).unwrap(), a);
    }
}
