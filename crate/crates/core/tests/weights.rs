use order66::cyclotomic::gcd;
use order66::elliptic::x66;
use order66::weights::{order_decomposition, weights_from_invariance};
use order66::{solve, verify_equivariance, CongruenceSystem, FibreAction, RootOfUnity, WeightSolution};
use proptest::prelude::*;

fn tame() -> CongruenceSystem {
    let mons = vec![vec![3, 0, 0], vec![0, 2, 0], vec![0, 0, 12], vec![0, 0, 1]];
    weights_from_invariance(&mons, &["a", "b", "c"], 66)
        .unwrap()
        .with("11a = 22; 11b = 33")
        .unwrap()
}

fn family() -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = (0..11i64)
        .map(|k| {
            let b = if k % 2 == 0 { 3 + 9 * k } else { 36 + 9 * k };
            [2 + 6 * k, b, 6 + 18 * k]
                .iter()
                .map(|v| v.rem_euclid(66) as u64)
                .collect()
        })
        .collect();
    out.sort();
    out
}

#[test]
fn unique_normalized_solution() {
    let sys = tame().with("a + c - b = 5").unwrap();
    assert_eq!(solve(&sys).unwrap(), vec![WeightSolution { values: vec![2, 3, 6] }]);
}

#[test]
fn family_without_normalization() {
    let got: Vec<Vec<u64>> = solve(&tame()).unwrap().into_iter().map(|s| s.values).collect();
    assert_eq!(got, family());
}

#[test]
fn family_members_are_equivariant() {
    for v in family() {
        let act = FibreAction::diagonal(66, v[0] as i64, v[1] as i64, v[2] as i64).unwrap();
        let m = verify_equivariance(&x66(), &act).unwrap();
        let e = (v[0] + v[2] + 66 - v[1]) % 66;
        assert_eq!(m, RootOfUnity::new(66, e as i64).unwrap());
    }
}

#[test]
fn order_decompositions() {
    assert_eq!(
        order_decomposition(66, &RootOfUnity::new(66, 5).unwrap())
            .unwrap()
            .to_string(),
        "1.66"
    );
    assert_eq!(
        order_decomposition(66, &RootOfUnity::new(6, -1).unwrap())
            .unwrap()
            .to_string(),
        "11.6"
    );
}

fn system_strategy() -> impl Strategy<Value = (u64, usize, Vec<(Vec<i64>, i64)>)> {
    (2u64..=66, 1usize..=3).prop_flat_map(|(n, k)| {
        let rel = (prop::collection::vec(-12i64..12, k), -20i64..20);
        (Just(n), Just(k), prop::collection::vec(rel, 0..4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solve_matches_exhaustive_filter((n, k, rels) in system_strategy()) {
        let names = ["a", "b", "c"];
        let mut sys = CongruenceSystem::new(n, &names[..k]).unwrap();
        for (c, r) in &rels {
            sys.add_relation(c, *r).unwrap();
        }
        let holds = |v: &[u64]| {
            rels.iter().all(|(c, r)| {
                let lhs: i64 = c.iter().zip(v).map(|(a, b)| a * *b as i64).sum();
                (lhs - r).rem_euclid(n as i64) == 0
            })
        };
        let mut want = Vec::new();
        let total = n.pow(k as u32);
        for idx in 0..total {
            let mut v = vec![0u64; k];
            let mut x = idx;
            for slot in v.iter_mut().rev() {
                *slot = x % n;
                x /= n;
            }
            if holds(&v) {
                want.push(WeightSolution { values: v });
            }
        }
        prop_assert_eq!(solve(&sys).unwrap(), want);
    }

    #[test]
    fn decomposition_multiplies_to_order(m in 1u64..20, d in 1u64..40, e in 0i64..200) {
        let full = m * d;
        let z = RootOfUnity::new(d, e).unwrap();
        let dec = order_decomposition(full, &z).unwrap();
        prop_assert_eq!(dec.m * dec.n, full);
        prop_assert_eq!(dec.n, d / gcd(d, e.rem_euclid(d as i64) as u64));
    }
}
