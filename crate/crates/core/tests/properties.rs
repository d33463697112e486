use num_bigint::BigInt;
use pathinv::algebra::{series_from_rational, LaurentSeries};
use pathinv::hankel::{det_cofactor, det_fraction_free, hankel_matrix, shifted_hankel_closed, HankelSpec};
use pathinv::{OmegaPoly, SquareMatrix, TPoly, TSeries};
use proptest::prelude::*;

fn omega_poly(max_len: usize) -> impl Strategy<Value = OmegaPoly> {
    prop::collection::vec(-40i64..40, 0..=max_len).prop_map(|c| OmegaPoly::from_i64s(&c))
}

fn series(order: usize) -> impl Strategy<Value = TSeries> {
    prop::collection::vec(omega_poly(3), 0..=order + 1).prop_map(move |c| TSeries::new(c, order))
}

fn unit_series(order: usize) -> impl Strategy<Value = TSeries> {
    (prop::bool::ANY, prop::collection::vec(omega_poly(3), 0..=order)).prop_map(move |(neg, rest)| {
        let c0 = OmegaPoly::constant(if neg { -1 } else { 1 });
        TSeries::new(std::iter::once(c0).chain(rest).collect(), order)
    })
}

fn tpoly(max_len: usize) -> impl Strategy<Value = TPoly> {
    prop::collection::vec(omega_poly(3), 0..=max_len).prop_map(TPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn omega_ring_laws(a in omega_poly(5), b in omega_poly(5), c in omega_poly(5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn omega_exact_division_recovers_factor(a in omega_poly(4), b in omega_poly(4)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn series_ring_laws(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn series_inverse_is_two_sided(a in unit_series(7)) {
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, TSeries::one(7));
        prop_assert_eq!(&inv * &a, TSeries::one(7));
    }

    #[test]
    fn rational_truncation_is_consistent(num in tpoly(4), den_tail in tpoly(3), big in 4usize..12, small in 0usize..4) {
        let den = TPoly::one() + den_tail.shift(1);
        let long = series_from_rational(&num, &den, big).unwrap();
        prop_assert_eq!(long.truncate(small), series_from_rational(&num, &den, small).unwrap());
    }

    #[test]
    fn laurent_parts_sum_back(s in series(6), shift in -5i64..3) {
        let x = LaurentSeries::from_series(&s, shift);
        prop_assume!(x.order() >= 0);
        let (p, r) = x.split();
        for e in shift.min(0)..=x.order() {
            let part = if e < 0 { p.coeff(e) } else { r.coeff(e as usize).clone() };
            prop_assert_eq!(part, x.coeff(e));
        }
    }

    #[test]
    fn negated_argument_is_involution(p in tpoly(6)) {
        prop_assert_eq!(p.substitute_neg_t().substitute_neg_t(), p);
    }

    #[test]
    fn bareiss_matches_cofactor(n in 0usize..=5, entries in prop::collection::vec(omega_poly(2), 25)) {
        let m = SquareMatrix::from_fn(n, |i, j| entries[i * 5 + j].clone());
        prop_assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m));
    }

    #[test]
    fn hankel_closed_form_for_integer_weights(alpha in -6i64..6, beta in -6i64..6, n in 0usize..=12) {
        prop_assume!(alpha != 0 || beta != 0);
        let (a, b) = (OmegaPoly::constant(alpha), OmegaPoly::constant(beta));
        let det = det_fraction_free(&hankel_matrix(&HankelSpec::combination(a.clone(), b.clone(), n)).unwrap()).unwrap();
        prop_assert_eq!(det, shifted_hankel_closed(n, &a, &b));
    }

    #[test]
    fn hankel_closed_form_is_homogeneous(alpha in -5i64..5, beta in -5i64..5, c in -4i64..4, n in 0usize..8) {
        let (a, b) = (OmegaPoly::constant(alpha), OmegaPoly::constant(beta));
        let scaled = shifted_hankel_closed(n, &a.scale(&BigInt::from(c)), &b.scale(&BigInt::from(c)));
        prop_assert_eq!(scaled, shifted_hankel_closed(n, &a, &b).scale(&BigInt::from(c).pow(n as u32)));
    }
}
