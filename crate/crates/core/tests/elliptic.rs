use complex::C;
use num_bigint::BigInt;
use num_rational::BigRational;
use order66::arithmetic::{fp2, Fp};
use order66::elliptic::form::expand_places;
use order66::elliptic::{ec_automorphism_bound, factor_places, force_a_zero, x66, y66, BinaryForm, Place};
use order66::poly::PolyRing;
use order66::ring::{Field, FiniteField, Rationals, Ring};
use order66::{base_orbits, verify_equivariance, BaseAction, FibreAction, KodairaType, RootOfUnity, WeierstrassModel};
use proptest::prelude::*;

// Minimal complex arithmetic for a numeric equivariance oracle.
mod complex {
    #[derive(Clone, Copy, Debug)]
    pub struct C(pub f64, pub f64);

    impl C {
        pub fn root(n: u64, k: i64) -> C {
            let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            C(a.cos(), a.sin())
        }
        pub fn mul(self, o: C) -> C {
            C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
        }
        pub fn add(self, o: C) -> C {
            C(self.0 + o.0, self.1 + o.1)
        }
        pub fn pow(self, e: u32) -> C {
            (0..e).fold(C(1.0, 0.0), |acc, _| acc.mul(self))
        }
        pub fn dist(self, o: C) -> f64 {
            ((self.0 - o.0).powi(2) + (self.1 - o.1).powi(2)).sqrt()
        }
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

// Order of Aut(E, O) for a general Weierstrass equation, by exhaustive search
// over the admissible changes of variables (u, r, s, t).
fn aut_count<K: FiniteField>(k: &K, a: [K::Elem; 5]) -> usize {
    let [a1, a2, a3, a4, a6] = a;
    let c = |n: i64| k.from_i64(n);
    let elems: Vec<K::Elem> = k.elements().collect();
    let mut count = 0;
    for u in elems.iter().filter(|u| !k.is_zero(u)) {
        let up = |e: u64| k.pow(u, e);
        for s in &elems {
            if k.mul(&up(1), &a1) != k.add(&a1, &k.mul(&c(2), s)) {
                continue;
            }
            for r in &elems {
                let rhs2 = k.sub(&k.add(&k.sub(&a2, &k.mul(s, &a1)), &k.mul(&c(3), r)), &k.mul(s, s));
                if k.mul(&up(2), &a2) != rhs2 {
                    continue;
                }
                for t in &elems {
                    let rhs3 = k.add(&k.add(&a3, &k.mul(r, &a1)), &k.mul(&c(2), t));
                    if k.mul(&up(3), &a3) != rhs3 {
                        continue;
                    }
                    let rhs4 = [
                        a4.clone(),
                        k.neg(&k.mul(s, &a3)),
                        k.mul(&c(2), &k.mul(r, &a2)),
                        k.neg(&k.mul(&k.add(t, &k.mul(r, s)), &a1)),
                        k.mul(&c(3), &k.mul(r, r)),
                        k.neg(&k.mul(&c(2), &k.mul(s, t))),
                    ]
                    .iter()
                    .fold(k.zero(), |acc, x| k.add(&acc, x));
                    let rhs6 = [
                        a6.clone(),
                        k.mul(r, &a4),
                        k.mul(&k.mul(r, r), &a2),
                        k.pow(r, 3),
                        k.neg(&k.mul(t, &a3)),
                        k.neg(&k.mul(t, t)),
                        k.neg(&k.mul(&k.mul(r, t), &a1)),
                    ]
                    .iter()
                    .fold(k.zero(), |acc, x| k.add(&acc, x));
                    if k.mul(&up(4), &a4) == rhs4 && k.mul(&up(6), &a6) == rhs6 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

// GF(16) as F_2[x]/(x^4 + x + 1), elements as bit patterns.
#[derive(Clone, Debug)]
struct Gf16;

impl Ring for Gf16 {
    type Elem = u8;
    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u8 {
        u8::from(n % 2 != BigInt::from(0))
    }
    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }
    fn neg(&self, a: &u8) -> u8 {
        *a
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        let mut acc = 0u8;
        let (mut a, mut b) = (*a, *b);
        while b > 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if a & 0x10 != 0 {
                a ^= 0x13;
            }
            b >>= 1;
        }
        acc
    }
    fn characteristic(&self) -> u64 {
        2
    }
    fn format(&self, a: &u8) -> String {
        a.to_string()
    }
}

impl Field for Gf16 {
    fn inv(&self, a: &u8) -> Option<u8> {
        (1..16u8).find(|b| self.mul(a, b) == 1)
    }
}

impl FiniteField for Gf16 {
    fn order(&self) -> u64 {
        16
    }
    fn element(&self, i: u64) -> u8 {
        i as u8
    }
    fn index(&self, a: &u8) -> u64 {
        *a as u64
    }
}

fn short<K: FiniteField>(k: &K, a4: i64, a6: i64) -> [K::Elem; 5] {
    [k.zero(), k.zero(), k.zero(), k.from_i64(a4), k.from_i64(a6)]
}

#[test]
fn automorphism_bound_in_characteristic_2() {
    let k = Gf16;
    assert_eq!(aut_count(&k, [0, 0, 1, 0, 0]), 24);
    assert_eq!(ec_automorphism_bound(2).unwrap(), 24);
}

#[test]
fn automorphism_bound_in_characteristic_3() {
    let k = fp2(3).unwrap();
    assert_eq!(aut_count(&k, short(&k, -1, 0)), 12);
    assert_eq!(ec_automorphism_bound(3).unwrap(), 12);
}

#[test]
fn automorphism_bound_for_p_at_least_5() {
    for p in [5u64, 7] {
        let k = fp2(p).unwrap();
        let mut best = 0;
        for a4 in k.elements() {
            for a6 in k.elements() {
                let disc = k.add(
                    &k.mul(&k.from_i64(4), &k.pow(&a4, 3)),
                    &k.mul(&k.from_i64(27), &k.mul(&a6, &a6)),
                );
                if k.is_zero(&disc) {
                    continue;
                }
                best = best.max(aut_count(&k, [k.zero(), k.zero(), k.zero(), a4, a6]));
            }
        }
        assert_eq!(best as u64, ec_automorphism_bound(p).unwrap(), "p = {p}");
    }
    for p in [11u64, 13] {
        let k = fp2(p).unwrap();
        assert_eq!(aut_count(&k, short(&k, 0, 1)), 6);
        assert_eq!(aut_count(&k, short(&k, 1, 0)), 4);
        assert_eq!(aut_count(&k, short(&k, 1, 1)), 2);
        assert_eq!(ec_automorphism_bound(p).unwrap(), 6);
    }
    assert_eq!(ec_automorphism_bound(0).unwrap(), 6);
    assert!(ec_automorphism_bound(9).is_err());
}

#[test]
fn x66_discriminant() {
    let x = x66();
    // -27 t1^2 (t1^11 - t0^11)^2, built from its factors.
    let f = &Rationals;
    let t1 = BinaryForm::monomial(f, 1, 1, q(1));
    let diff = BinaryForm::new(f, 11, {
        let mut c = vec![q(0); 12];
        c[11] = q(1);
        c[0] = q(-1);
        c
    })
    .unwrap();
    let want = t1.pow(f, 2).mul(f, &diff.pow(f, 2)).scale(f, &q(-27));
    assert_eq!(x.discriminant(), want);
    let ledger = x.euler_ledger().unwrap();
    assert_eq!(ledger.total, 24);
    assert_eq!(ledger.count(KodairaType::II), 12);
}

#[test]
fn orbit_decompositions() {
    let x = x66();
    let places: Vec<_> = factor_places(x.field(), &x.discriminant())
        .unwrap()
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let d = base_orbits(x.field(), &BaseAction::Multiplicative { order: 11 }, &places).unwrap();
    assert_eq!(d.fixed.len(), 2);
    assert_eq!(d.orbit_lengths(), vec![1, 11]);
    let geometric: usize = places.iter().map(Place::residue_degree).sum();
    assert_eq!(d.geometric_points(), geometric as u64);

    let y = y66();
    let places: Vec<_> = factor_places(y.field(), &y.discriminant())
        .unwrap()
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let d = base_orbits(y.field(), &BaseAction::Translation, &places).unwrap();
    assert_eq!(d.fixed.len(), 1);
    assert_eq!(d.fixed[0].place, Place::Infinity);
    assert_eq!(d.orbit_lengths(), vec![1, 11]);
}

#[test]
fn a_vanishing_depends_on_degree() {
    let s = BaseAction::Multiplicative { order: 11 };
    assert!(force_a_zero(8, 12, &s, 0).forced());
    assert!(!force_a_zero(13, 12, &s, 0).forced());
}

#[test]
fn g66_multipliers_match_numeric_oracle() {
    let g = FibreAction::diagonal(66, 2, 3, 6).unwrap();
    let pts: Vec<(C, C)> = (1..6)
        .map(|i| (C(0.3 * i as f64, -0.2), C(0.1, 0.07 * i as f64)))
        .collect();
    for k in 1..=66u64 {
        let gk = g.pow(k);
        let m = verify_equivariance(&x66(), &gk).unwrap();
        assert_eq!(m, RootOfUnity::new(66, 5 * k as i64).unwrap());
        // F(x, t) = x^3 + t^12 - t, and y^2 = F. Check F(g.x, g.t) = (g.y)^2 F(x, t) / y^2.
        let (zx, zy, zt) = (
            C::root(66, 2 * k as i64),
            C::root(66, 3 * k as i64),
            C::root(66, 6 * k as i64),
        );
        for &(x, t) in &pts {
            let big_f = |x: C, t: C| x.pow(3).add(t.pow(12)).add(t.mul(C(-1.0, 0.0)));
            let lhs = big_f(zx.mul(x), zt.mul(t));
            let rhs = zy.pow(2).mul(big_f(x, t));
            assert!(lhs.dist(rhs) < 1e-9, "k = {k}");
        }
    }
    let m11 = verify_equivariance(&x66(), &g.pow(11)).unwrap();
    assert_eq!(m11, RootOfUnity::new(66, 55).unwrap());
}

fn form_strategy(p: i64, deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..p, deg + 1).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn places_round_trip_over_f11(c in form_strategy(11, 12)) {
        let f = Fp::new(11).unwrap();
        let form = BinaryForm::new(&f, 12, c.iter().map(|&x| x as u64).collect()).unwrap();
        let places = factor_places(&f, &form).unwrap();
        let deg: usize = places.iter().map(|(p, m)| p.residue_degree() * *m as usize).sum();
        prop_assert_eq!(deg, 12);
        let back = expand_places(&f, 12, &places);
        prop_assert!(back.ratio(&f, &form).is_some());
        let pr = PolyRing::new(f.clone());
        for (p, _) in &places {
            if let Place::Finite(poly) = p {
                let d = poly.degree().unwrap();
                if (2..=3).contains(&d) {
                    prop_assert!(f.elements().all(|x| !f.is_zero(&pr.eval(poly, &x))));
                }
            }
        }
    }

    #[test]
    fn places_round_trip_over_q(c in prop::collection::vec(-6i64..7, 9).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))) {
        let form = BinaryForm::new(&Rationals, 8, c.iter().map(|&x| q(x)).collect()).unwrap();
        let places = factor_places(&Rationals, &form).unwrap();
        let back = expand_places(&Rationals, 8, &places);
        prop_assert!(back.ratio(&Rationals, &form).is_some());
    }

    #[test]
    fn random_models_have_euler_24(a in prop::collection::vec(0u64..13, 9), b in prop::collection::vec(0u64..13, 13)) {
        let f = Fp::new(13).unwrap();
        if let Ok(m) = WeierstrassModel::from_coefficients(f, a, b) {
            let ledger = m.euler_ledger().unwrap();
            prop_assert_eq!(m.discriminant().degree(), 24);
            prop_assert_eq!(ledger.total, 24);
            let sum: u32 = ledger.places.iter().map(|p| p.kodaira.euler_number() * p.residue_degree as u32).sum();
            prop_assert_eq!(sum, 24);
        }
    }
}
