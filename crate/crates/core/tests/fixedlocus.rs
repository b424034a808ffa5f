use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use order66::fixedlocus::{
    check_lefschetz_consistency, fix_identities, hodge_index_genus_bound, is_rational_square, rh_max_fixed_points,
    CurveComponent, FiniteAction,
};
use order66::{EigenProfile, FixedLocus};
use proptest::prelude::*;

fn rh_oracle(n: u64, g: u64) -> u64 {
    let (n, g) = (n as i64, g as i64);
    (0..=4 * g + 4)
        .filter(|&r| (0..=g).any(|gq| 2 * g - 2 == n * (2 * gq - 2) + r * (n - 1)))
        .max()
        .unwrap_or(0) as u64
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn riemann_hurwitz_values() {
    assert_eq!(rh_max_fixed_points(3, 9).unwrap(), 11);
    assert!(rh_max_fixed_points(3, 9).unwrap() < 14);
    assert_eq!(rh_max_fixed_points(2, 10).unwrap(), 22);
    assert_eq!(rh_oracle(3, 9), 11);
}

#[test]
fn hodge_bound_for_genus_ten() {
    let b = hodge_index_genus_bound(&CurveComponent::new(10), 12, 4).unwrap();
    assert_eq!(b.feasible, vec![0, 1]);
    assert_eq!(b.equality, vec![1]);
    assert!(hodge_index_genus_bound(&CurveComponent::new(10), 5, 4)
        .unwrap()
        .feasible
        .is_empty());
    assert!(!is_rational_square(&rat(1, 3)));
}

#[test]
fn lefschetz_mismatch_is_reported() {
    let h: EigenProfile = "[1, z66:20, -1]".parse().unwrap();
    let g33 = h.power_profile(33);
    let ok = check_lefschetz_consistency(&FixedLocus::new(0, [10]), &g33).unwrap();
    assert!(ok.passes());
    let bad = check_lefschetz_consistency(&FixedLocus::new(1, [10]), &g33).unwrap();
    assert!(!bad.passes());
    assert_eq!((bad.locus_euler, bad.lefschetz), (-17, -18));
}

#[test]
fn two_and_three_cycle() {
    let s = FiniteAction::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
    assert_eq!(s.order(), 6);
    assert_eq!(s.power(2).fixed_points(), BTreeSet::from([0, 1]));
    assert_eq!(s.power(3).fixed_points(), BTreeSet::from([2, 3, 4]));
    assert!(fix_identities(&s, 2, 3).all());
}

fn perm_strategy() -> impl Strategy<Value = Vec<usize>> {
    (1usize..14).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn euler_is_points_plus_curve_terms(pts in 0u64..40, genera in prop::collection::vec(0u64..20, 0..5)) {
        let l = FixedLocus::new(pts, genera.clone());
        let want = pts as i64 + genera.iter().map(|&g| 2 - 2 * g as i64).sum::<i64>();
        prop_assert_eq!(l.euler_characteristic(), want);
        prop_assert_eq!(l.to_string().parse::<FixedLocus>().unwrap(), l);
    }

    #[test]
    fn fix_identities_hold(perm in perm_strategy(), a in 1u64..30, b in 1u64..30) {
        let s = FiniteAction::new(perm).unwrap();
        prop_assert!(fix_identities(&s, a, b).all());
        prop_assert_eq!(s.power(s.order()), FiniteAction::identity(s.len()));
    }

    #[test]
    fn riemann_hurwitz_matches_oracle(n in prop::sample::select(vec![2u64, 3, 5, 7, 11]), g in 0u64..25) {
        prop_assert_eq!(rh_max_fixed_points(n, g).unwrap(), rh_oracle(n, g));
    }

    #[test]
    fn involutions_fix_at_most_2g_plus_2(g in 0u64..40) {
        let r = rh_max_fixed_points(2, g).unwrap();
        prop_assert_eq!(r, 2 * g + 2);
        prop_assert!(rh_max_fixed_points(2, g + 1).unwrap() >= r);
    }

    #[test]
    fn hodge_sets_are_downward_closed(g in 2u64..15, max in 0u64..60, offset in 2u64..8) {
        let b = hodge_index_genus_bound(&CurveComponent::new(g), max, offset).unwrap();
        let want: Vec<u64> = (0..10_000)
            .filter(|&k| (2 * (k + offset) as i64 - 2) * (2 * g as i64 - 2) <= (max * max) as i64)
            .collect();
        prop_assert_eq!(&b.feasible, &want);
        prop_assert!(b.feasible.iter().enumerate().all(|(i, &k)| k == i as u64));
        prop_assert!(b.equality.iter().all(|k| b.feasible.contains(k)));
    }

    #[test]
    fn squares_are_recognized(a in -300i64..300, b in 1i64..300, c in 1i64..300) {
        prop_assert!(is_rational_square(&rat(a * a, b * b)));
        let q = rat(a, b);
        let (n, d) = (q.numer().clone(), q.denom().clone());
        let root_exists = (0..=300i64).any(|x| BigInt::from(x * x) == n) && (1..=300i64).any(|y| BigInt::from(y * y) == d);
        prop_assert_eq!(is_rational_square(&q), root_exists);
        prop_assert!(!is_rational_square(&rat(-c, b)));
    }
}
