use octaspec_core::exact_algebra::*;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-200i64..=200, 1i64..=60).prop_map(|(p, q)| rat(p, q))
}

fn quad() -> impl Strategy<Value = QuadExt> {
    (small_rat(), small_rat()).prop_map(|(a, b)| QuadExt::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rational_field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !a.is_zero() {
            prop_assert_eq!(&a * (int(1) / &a), int(1));
        }
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn quad_field_axioms(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-&x), QuadExt::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), QuadExt::one());
            prop_assert_eq!(&(&x * &y) / &x, y.clone());
        }
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.to_string().parse::<QuadExt>().unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn norm_of_powers(x in quad(), k in 0u64..=20) {
        let lhs = &x.pow(k) * &x.conj().pow(k);
        prop_assert!(lhs.is_rational());
        prop_assert_eq!(lhs.to_rational().unwrap(), rat_pow(&x.norm(), k as u32));
    }
}
