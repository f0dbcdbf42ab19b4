use equichar::cyclo::rational::{divisors, int};
use equichar::cyclo::{crt_idempotent, cyclotomic_polynomial, Cyclotomic, RatPoly};
use num_integer::Integer;
use proptest::prelude::*;

fn element(n: u32, coeffs: &[i64]) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(n);
    for (k, &c) in coeffs.iter().enumerate() {
        acc = &acc + &Cyclotomic::zeta_pow(n, k as i64).scale(&int(c));
    }
    acc
}

fn arb_element() -> impl Strategy<Value = Cyclotomic> {
    (1u32..=24).prop_flat_map(|n| prop::collection::vec(-4i64..=4, n as usize).prop_map(move |c| element(n, &c)))
}

fn arb_pair() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, i64)> {
    (1u32..=24).prop_flat_map(|n| {
        let v = prop::collection::vec(-4i64..=4, n as usize);
        let k = (1i64..=n as i64).prop_filter("unit", move |k| k.gcd(&(n as i64)) == 1);
        (v.clone(), v, k).prop_map(move |(a, b, k)| (element(n, &a), element(n, &b), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_is_two_sided(a in arb_element()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!((&inv * &a).is_one());
    }

    #[test]
    fn galois_is_ring_homomorphism((a, b, k) in arb_pair()) {
        prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
    }

    #[test]
    fn galois_composes((a, _b, k) in arb_pair(), l in 1i64..50) {
        let n = a.conductor() as i64;
        prop_assume!(l.gcd(&n) == 1);
        prop_assert_eq!(a.galois(k).unwrap().galois(l).unwrap(), a.galois(k * l).unwrap());
        prop_assert_eq!(a.galois(-1).unwrap(), a.conj());
    }

    #[test]
    fn lift_preserves_value_and_arithmetic((a, b, _k) in arb_pair(), m in 1u32..=6) {
        let n = a.conductor();
        let (la, lb) = (a.lift(n * m).unwrap(), b.lift(n * m).unwrap());
        prop_assert_eq!(la.conductor(), n * m);
        prop_assert_eq!(&la, &a);
        prop_assert_eq!(&la * &lb, &a * &b);
        prop_assert_eq!(&la - &lb, &a - &b);
    }

    #[test]
    fn rational_round_trip(p in -50i64..50, q in 1i64..20, n in 1u32..=24) {
        let r = num_rational::BigRational::new(p.into(), q.into());
        prop_assert_eq!(Cyclotomic::from_rational(r.clone(), n).to_rational(), Some(r));
    }
}

#[test]
fn product_of_cyclotomic_polynomials() {
    for n in 1..=40u32 {
        let prod = divisors(n as u64)
            .into_iter()
            .fold(RatPoly::one(), |acc, d| &acc * &cyclotomic_polynomial(d as u32));
        assert_eq!(prod, RatPoly::x_pow_minus_one(n as usize), "n = {n}");
    }
}

#[test]
fn idempotent_separates_primitive_roots() {
    for r in 1..=24u32 {
        let e = crt_idempotent(r);
        for k in 0..r as i64 {
            let v = e.eval(&Cyclotomic::zeta_pow(r, k));
            let primitive = k.gcd(&(r as i64)) == 1;
            assert_eq!(v.is_one(), primitive, "r = {r}, k = {k}");
            assert_eq!(v.is_zero(), !primitive, "r = {r}, k = {k}");
        }
    }
}
