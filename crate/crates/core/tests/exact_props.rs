use assoc_core::exact::{
    affine_dimension, are_antiparallel, convex_hull, format_rational, parse_rational, ratio,
    Rational, RationalMatrix, RationalVector,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn point(dim: usize) -> impl Strategy<Value = RationalVector> {
    prop::collection::vec(rational(), dim).prop_map(RationalVector::new)
}

fn cloud() -> impl Strategy<Value = Vec<RationalVector>> {
    (1usize..=4).prop_flat_map(|dim| prop::collection::vec(point(dim), 1..=12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hull_contains_input_with_exact_incidences(pts in cloud()) {
        let p = convex_hull(&pts).unwrap();
        prop_assert!(p.incidences_consistent());
        for q in &pts {
            for f in &p.facets {
                prop_assert!(f.normal.dot(q) <= f.offset);
            }
        }
        for v in &p.vertices {
            prop_assert!(pts.contains(v));
        }
        prop_assert_eq!(p.intrinsic_dim, affine_dimension(&pts).unwrap());
    }

    #[test]
    fn hull_is_idempotent(pts in cloud()) {
        let p = convex_hull(&pts).unwrap();
        let again = convex_hull(&p.vertices).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn hull_ignores_input_order(pts in cloud().prop_flat_map(|v| {
        let shuffled = Just(v.clone()).prop_shuffle();
        (Just(v), shuffled)
    })) {
        let (a, b) = pts;
        prop_assert_eq!(convex_hull(&a).unwrap(), convex_hull(&b).unwrap());
    }

    #[test]
    fn affine_combinations_keep_dimension(
        pts in cloud(),
        weights in prop::collection::vec(rational(), 12),
    ) {
        let k = pts.len();
        let mut w: Vec<Rational> = weights[..k].to_vec();
        let rest: Rational = w[1..].iter().sum();
        w[0] = Rational::from_integer(1.into()) - rest;
        let combo = pts
            .iter()
            .zip(&w)
            .fold(RationalVector::zeros(pts[0].dim()), |acc, (p, c)| acc.add(&p.scale(c)));
        let mut more = pts.clone();
        more.push(combo);
        prop_assert_eq!(affine_dimension(&more).unwrap(), affine_dimension(&pts).unwrap());
    }

    #[test]
    fn rationals_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)), Some(r));
    }

    #[test]
    fn facet_normals_are_canonical(pts in cloud()) {
        let p = convex_hull(&pts).unwrap();
        for f in &p.facets {
            prop_assert!(f.normal.iter().all(|x| x.is_integer()));
            prop_assert_eq!(f.normal.primitive_integer(), f.normal.iter().map(|x| x.to_integer()).collect::<Vec<_>>());
            prop_assert!(are_antiparallel(&f.normal, &f.normal.neg()).unwrap());
        }
    }

    #[test]
    fn rank_matches_determinant(rows in prop::collection::vec(point(3), 3)) {
        let m = RationalMatrix::new(rows).unwrap();
        let det = m.determinant().unwrap();
        prop_assert_eq!(m.rank() == 3, det != Rational::from_integer(0.into()));
    }
}
