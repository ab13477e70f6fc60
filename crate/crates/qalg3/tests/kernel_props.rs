//! Property tests for the scalar kernel: ring axioms, parity transforms,
//! and reducedness of every rational produced.

use num_traits::{One, Zero};
use proptest::prelude::*;

use qalg3::param::Param;
use qalg3::poly::ParamPoly;
use qalg3::rational::{ratio, Rat};
use qalg3::series::ZSeries;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn arb_poly() -> impl Strategy<Value = ParamPoly> {
    // up to 4 terms over a small parameter subset with small exponents
    proptest::collection::vec(
        (0usize..4, 0u16..3, 0u16..2, arb_rat()),
        0..4,
    )
    .prop_map(|terms| {
        let vars = [Param::A1, Param::B2, Param::C1, Param::Rho];
        let mut p = ParamPoly::zero();
        for (v, e1, e2, c) in terms {
            let mono = ParamPoly::var(vars[v])
                .pow(e1 as u32)
                .mul(&ParamPoly::var(Param::Rho).pow(e2 as u32));
            p = p.add(&mono.scale(&c));
        }
        p
    })
}

fn arb_series(order: usize) -> impl Strategy<Value = ZSeries> {
    proptest::collection::vec(arb_poly(), order + 1)
        .prop_map(move |coeffs| ZSeries::from_coeffs(coeffs, order))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poly_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        // commutativity and associativity
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        // distributivity
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // identities
        prop_assert_eq!(a.add(&ParamPoly::zero()), a.clone());
        prop_assert_eq!(a.mul(&ParamPoly::one()), a.clone());
        prop_assert_eq!(a.sub(&a), ParamPoly::zero());
    }

    #[test]
    fn series_ring_axioms(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn negate_z_involution_and_homomorphism(a in arb_series(5), b in arb_series(5)) {
        prop_assert_eq!(a.negate_z().negate_z(), a.clone());
        prop_assert_eq!(
            a.mul(&b).unwrap().negate_z(),
            a.negate_z().mul(&b.negate_z()).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().negate_z(),
            a.negate_z().add(&b.negate_z()).unwrap()
        );
    }

    #[test]
    fn div_z_inverts_mul_z(a in arb_series(4)) {
        prop_assert_eq!(a.mul_z().div_z().unwrap(), a.clone());
    }

    #[test]
    fn parity_split(a in arb_series(5)) {
        // a equals its even part plus its odd part, detected by the checks
        let even = a.add(&a.negate_z()).unwrap().scale(&ratio(1, 2));
        let odd = a.sub(&a.negate_z()).unwrap().scale(&ratio(1, 2));
        prop_assert!(even.is_even());
        prop_assert!(odd.is_odd());
        prop_assert_eq!(even.add(&odd).unwrap(), a.clone());
    }

    #[test]
    fn rationals_stay_reduced(a in arb_poly(), b in arb_poly()) {
        use num_integer::Integer;
        for (_, c) in a.mul(&b).terms() {
            prop_assert!(c.denom() > &num_bigint::BigInt::zero());
            prop_assert!(c.numer().gcd(c.denom()).is_one() || c.numer().is_zero());
        }
    }
}
