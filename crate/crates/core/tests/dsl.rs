use cohom_core::dsl::{parse_relation, print_relation};
use cohom_core::{Field, Rat, RatFunc};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = RatFunc> {
    (-4i64..=4, 1i64..=3, -2i64..=2, any::<bool>()).prop_map(|(n, d, k, shift)| {
        let mut c = RatFunc::from_i64(n).div_ref(&RatFunc::from_i64(d)).unwrap();
        c = c.mul_ref(&RatFunc::q().pow_i(k).unwrap());
        if shift {
            c = c.add_ref(&RatFunc::one());
        }
        c
    })
}

fn labels(style: usize) -> Vec<String> {
    match style {
        0 => vec!["x".into(), "y".into()],
        1 => vec!["z1_1".into(), "z2_1".into()],
        2 => vec!["x'".into(), "y'".into()],
        _ => vec!["a_b".into(), "b_a".into()],
    }
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(d in 2usize..=3, style in 0usize..4, coeffs in prop::collection::vec(scalar(), 8)) {
        let g = labels(style);
        let v: Vec<RatFunc> = coeffs[..1 << d].to_vec();
        prop_assume!(v.iter().any(|c| !c.is_zero()));
        let text = print_relation(&v, d, &g);
        let (d2, v2) = parse_relation::<RatFunc>(&text, &g).unwrap();
        prop_assert_eq!(d2, d);
        prop_assert_eq!(v2, v, "{}", text);
    }

    #[test]
    fn rational_relations_round_trip(coeffs in prop::collection::vec((-9i64..=9, 1i64..=9), 9)) {
        let g: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
        let v: Vec<Rat> = coeffs.iter().map(|&(n, d)| Rat::new(n, d)).collect();
        prop_assume!(v.iter().any(|c| !c.is_zero()));
        let text = print_relation(&v, 2, &g);
        prop_assert_eq!(parse_relation::<Rat>(&text, &g).unwrap(), (2, v));
    }
}
