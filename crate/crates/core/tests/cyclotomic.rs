use num_bigint::BigInt;
use num_traits::One;
use order66::cyclotomic::{divisors, euler_phi, gcd, CyclotomicRing};
use order66::poly::PolyRing;
use order66::ring::{Integers, Ring};
use order66::{cyclotomic_polynomial, primitive_root_sum, RootOfUnity};
use proptest::prelude::*;

fn phi_by_counting(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

// Sum of cos(2 pi k / n) over k coprime to n, rounded.
fn root_sum_numeric(n: u64) -> i64 {
    let s: f64 = (1..=n)
        .filter(|&k| gcd(k, n) == 1)
        .map(|k| (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
        .sum();
    s.round() as i64
}

#[test]
fn root_sums_of_interest() {
    assert_eq!(primitive_root_sum(66), -1);
    assert_eq!(primitive_root_sum(6), 1);
    assert_eq!(primitive_root_sum(12), 0);
    for n in [6, 12, 66] {
        assert_eq!(primitive_root_sum(n), root_sum_numeric(n));
    }
}

#[test]
fn phi_sums_and_factorization_of_x_n_minus_1() {
    let zr = PolyRing::new(Integers);
    for n in 1..=200u64 {
        assert_eq!(divisors(n).iter().map(|&d| euler_phi(d)).sum::<u64>(), n);
        let mut prod = zr.one();
        for d in divisors(n) {
            prod = zr.mul(&prod, &cyclotomic_polynomial(d).unwrap().to_poly());
        }
        let target = zr.sub(&zr.monomial(BigInt::one(), n as usize), &zr.one());
        assert_eq!(prod, target, "n = {n}");
    }
}

#[test]
fn phi6_is_x2_minus_x_plus_1() {
    assert_eq!(cyclotomic_polynomial(6).unwrap().to_string(), "x^2 - x + 1");
}

#[test]
fn root_sum_matches_ring_oracle() {
    for n in 1..=100u64 {
        let ring = CyclotomicRing::new(Integers, n).unwrap();
        let mut acc = ring.zero();
        for k in (1..=n).filter(|&k| gcd(k, n) == 1) {
            acc = ring.add(&acc, &ring.root(&RootOfUnity::new(n, k as i64).unwrap()).unwrap());
        }
        let s = ring.as_integer(&acc).expect("sum of a full orbit is rational");
        assert_eq!(s, BigInt::from(primitive_root_sum(n)), "n = {n}");
    }
}

#[test]
fn zeta66_to_the_11_has_order_6() {
    let z = RootOfUnity::primitive(66).power(11);
    assert_eq!(z.order(), 6);
    assert_eq!(z, RootOfUnity::primitive(6));
}

proptest! {
    #[test]
    fn phi_matches_counting(n in 1u64..2000) {
        prop_assert_eq!(euler_phi(n), phi_by_counting(n));
    }

    #[test]
    fn root_sum_matches_numeric(n in 1u64..400) {
        prop_assert_eq!(primitive_root_sum(n), root_sum_numeric(n));
    }

    #[test]
    fn orbits_partition_the_nth_roots(n in 1u64..120) {
        let mut seen = std::collections::BTreeSet::new();
        let mut orbits = 0;
        for k in 0..n {
            let z = RootOfUnity::new(n, k as i64).unwrap();
            if seen.contains(&z) {
                continue;
            }
            let orbit = z.conjugate_orbit();
            prop_assert_eq!(orbit.len() as u64, euler_phi(z.order()));
            for w in orbit {
                prop_assert_eq!(w.order(), z.order());
                prop_assert!(seen.insert(w));
            }
            orbits += 1;
        }
        prop_assert_eq!(seen.len() as u64, n);
        prop_assert_eq!(orbits, divisors(n).len());
    }

    #[test]
    fn power_order_is_n_over_gcd(n in 1u64..500, e in 0i64..500, k in 1i64..200) {
        let z = RootOfUnity::new(n, e).unwrap();
        let w = z.power(k);
        prop_assert_eq!(w.order(), z.order() / gcd(z.order(), k as u64));
        prop_assert_eq!(z.mul(&z.inverse()), RootOfUnity::one());
    }
}
