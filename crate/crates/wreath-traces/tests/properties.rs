//! Property tests: field and quaternion axioms on random samples, the
//! colored-weight product rule, and partition-string round-trips.

use proptest::prelude::*;

use wreath_traces::census::MarkedPartition;
use wreath_traces::exact::{ratio, QuadField, Quaternion, Rational};
use wreath_traces::gamma::{table_for, GammaSpec};
use wreath_traces::series::{colored_generating_function, ColorSpec};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(num, den)| ratio(num, den))
}

fn quad_field() -> impl Strategy<Value = QuadField> {
    (rational(), rational(), rational(), rational())
        .prop_map(|(a, b, c, d)| QuadField::new(a, b, c, d))
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (quad_field(), quad_field(), quad_field(), quad_field())
        .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

proptest! {
    #[test]
    fn field_mul_is_commutative(x in quad_field(), y in quad_field()) {
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn field_mul_is_associative(x in quad_field(), y in quad_field(), z in quad_field()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn field_mul_distributes_over_add(x in quad_field(), y in quad_field(), z in quad_field()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn field_inverse_is_a_right_inverse(x in quad_field()) {
        prop_assume!(!x.is_zero());
        let inverse = x.inverse().unwrap();
        prop_assert_eq!(&x * &inverse, QuadField::one());
    }
}

proptest! {
    #[test]
    fn quat_mul_is_associative(p in quaternion(), q in quaternion(), r in quaternion()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn quat_conjugate_gives_norm(q in quaternion()) {
        let product = &q * &q.conjugate();
        prop_assert_eq!(product.w, q.norm_sq());
        prop_assert!(product.x.is_zero());
        prop_assert!(product.y.is_zero());
        prop_assert!(product.z.is_zero());
    }

    #[test]
    fn field_to_real_is_a_ring_hom_to_within_rounding(x in quad_field(), y in quad_field()) {
        let product = (&x * &y).to_f64();
        let direct = x.to_f64() * y.to_f64();
        let scale = 1.0f64.max(product.abs());
        prop_assert!((product - direct).abs() / scale < 1e-9);
    }
}

fn color_spec() -> impl Strategy<Value = ColorSpec> {
    (proptest::collection::vec(0u64..6, 0..6), 0u64..4)
        .prop_map(|(prefix, tail)| ColorSpec { prefix, tail })
}

proptest! {
    #[test]
    fn colored_weights_product_rule(a in color_spec(), b in color_spec()) {
        let n_max = 24;
        let sum = a.add(&b);
        let left = colored_generating_function(&sum, n_max);
        let right = colored_generating_function(&a, n_max)
            .mul(&colored_generating_function(&b, n_max))
            .unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn colored_weights_constant_term_is_one(spec in color_spec()) {
        let series = colored_generating_function(&spec, 16);
        prop_assert_eq!(series.coeff(0), &num::BigUint::from(1u32));
    }
}

fn grid_spec() -> impl Strategy<Value = GammaSpec> {
    prop_oneof![
        (1u32..=6).prop_map(GammaSpec::Cyclic),
        (1u32..=4).prop_map(GammaSpec::BinaryDihedral),
        Just(GammaSpec::BinaryTetrahedral),
        Just(GammaSpec::BinaryOctahedral),
        Just(GammaSpec::BinaryIcosahedral),
    ]
}

proptest! {
    #[test]
    fn partition_strings_round_trip(
        spec in grid_spec(),
        entries in proptest::collection::vec((1u64..6, 0usize..16, 1u64..4), 0..5),
    ) {
        let table = table_for(spec);
        let class_count = table.class_count();
        let mp = MarkedPartition::from_parts(
            entries
                .into_iter()
                .map(|(r, alpha, p)| ((r, alpha % class_count), p)),
        );
        let rendered = mp.render();
        let parsed = MarkedPartition::parse(&rendered, &table).unwrap();
        prop_assert_eq!(parsed, mp);
    }

    #[test]
    fn enumeration_weight_is_conserved(spec in grid_spec(), n in 0u64..6) {
        let table = table_for(spec);
        for mp in wreath_traces::census::enumerate_marked_partitions(&table, n) {
            prop_assert_eq!(mp.weight(), n);
        }
    }
}
