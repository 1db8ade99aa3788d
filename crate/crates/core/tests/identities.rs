//! Identities that tie several modules together, as property tests.

use proptest::prelude::*;

use qtcomb::boxes::{box_sum, partition_weight, Partition};
use qtcomb::ffield::subspace_sum;
use qtcomb::macschur::{bialternant_spec, ez, hz, jacobi_trudi_spec, tableau_sum, SkewShape};
use qtcomb::permstat::{ribbon_qt, RibbonRoute};
use qtcomb::qtnum::{binomial, gaussian_binomial, multinomial, Composition};
use qtcomb::TPoly;

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=3, 1..=3).prop_map(Composition::new)
}

fn partition_in_box(rows: usize, width: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=width, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn binomial_routes_agree(n in 0u32..=5, k in 0u32..=5, p in prop::sample::select(vec![2u64, 3])) {
        prop_assume!(k <= n);
        let b = binomial(n, k, p).unwrap();
        prop_assert_eq!(&box_sum(n, k, p).unwrap(), &b);
        if n <= 4 {
            prop_assert_eq!(&subspace_sum(n, k, p).unwrap(), &b);
        }
        prop_assert_eq!(b.eval_one(), gaussian_binomial(n, k).eval_at(&p.into()).unwrap());
    }

    #[test]
    fn single_rows_are_binomials(r in 0u32..=4, k in 0u32..=3, q in 2u64..=3) {
        let shape = SkewShape::straight(&Partition::new(vec![r]).unwrap());
        let jt = jacobi_trudi_spec(&shape, k, q).unwrap();
        prop_assert_eq!(&jt, &binomial(r + k, k, q).unwrap());
        prop_assert_eq!(&jt, &bialternant_spec(shape.lambda(), k, q).unwrap());
    }

    #[test]
    fn single_columns_are_elementary(r in 0u32..=3, k in 0u32..=3, q in 2u64..=3) {
        prop_assume!(r <= k + 1);
        let shape = SkewShape::straight(&Partition::new(vec![1; r as usize]).unwrap());
        prop_assert_eq!(tableau_sum(&shape, k, q).unwrap(), ez(r as i64, k + 1, q).unwrap());
    }

    #[test]
    fn schur_of_a_rectangle_box_matches_the_weight_sum(lambda in partition_in_box(2, 3), q in 2u64..=3) {
        let k = 2;
        let shape = SkewShape::straight(&lambda);
        prop_assert_eq!(jacobi_trudi_spec(&shape, k, q).unwrap(), tableau_sum(&shape, k, q).unwrap());
        prop_assert_eq!(bialternant_spec(&lambda, k, q).unwrap(), tableau_sum(&shape, k, q).unwrap());
    }

    #[test]
    fn ribbons_partition_the_multinomial(alpha in composition(), q in 2u64..=3) {
        // multinomial(alpha) = sum of r_beta over the coarsenings beta of alpha
        let total: TPoly = alpha
            .coarsenings()
            .iter()
            .map(|beta| ribbon_qt(beta, q, RibbonRoute::DescentSum).unwrap())
            .sum();
        prop_assert_eq!(total, multinomial(&alpha, q).unwrap());
    }

    #[test]
    fn hz_is_the_full_box_weight_sum(r in 0u32..=3, k in 0u32..=2, q in 2u64..=3) {
        let direct: TPoly = Partition::in_box(k as usize, r)
            .iter()
            .map(|l| partition_weight(l, k as usize).unwrap().to_poly(q).unwrap())
            .sum();
        prop_assert_eq!(hz(r as i64, k, q).unwrap(), direct);
    }
}
