//! Integer polynomials: content, Hensel lifting and Zassenhaus recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::Factorize;
use super::{Poly, PolyRing};
use crate::arithmetic::field::{is_prime, Fp};
use crate::ring::{mod_floor, Integers, Rationals, Ring};

type ZPoly = Poly<BigInt>;

fn zr() -> PolyRing<Integers> {
    PolyRing::new(Integers)
}

pub fn content(f: &ZPoly) -> BigInt {
    let g = f.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if f.leading().is_some_and(|l| l.is_negative()) {
        -g
    } else {
        g
    }
}

pub fn primitive_part(f: &ZPoly) -> ZPoly {
    let c = content(f);
    if c.is_zero() {
        return f.clone();
    }
    zr().from_coeffs(f.coeffs().iter().map(|x| x / &c).collect())
}

/// Clears denominators and removes the content; the leading coefficient ends positive.
pub fn primitive_from_rational(f: &Poly<BigRational>) -> ZPoly {
    let l = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let v = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    primitive_part(&zr().from_coeffs(v))
}

pub fn to_rational(f: &ZPoly) -> Poly<BigRational> {
    PolyRing::new(Rationals).from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    )
}

fn reduce(f: &ZPoly, m: &BigInt) -> ZPoly {
    zr().from_coeffs(f.coeffs().iter().map(|c| mod_floor(c, m)).collect())
}

fn symmetric(f: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    zr().from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = mod_floor(c, m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn to_fp(f: &ZPoly, fp: &Fp) -> Poly<u64> {
    PolyRing::new(fp.clone()).from_coeffs(f.coeffs().iter().map(|c| fp.from_int(c)).collect())
}

fn from_fp(f: &Poly<u64>) -> ZPoly {
    zr().from_coeffs(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// Exact quotient `f / g` in `Z[x]`, if it exists.
pub fn div_exact(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let dg = g.degree()?;
    let lg = g.leading()?.clone();
    let mut r: Vec<BigInt> = f.coeffs().to_vec();
    if r.len() <= dg {
        return if f.is_zero() { Some(zr().zero()) } else { None };
    }
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for i in (dg..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (c, rem) = r[i].div_rem(&lg);
        if !rem.is_zero() {
            return None;
        }
        for (j, gc) in g.coeffs().iter().enumerate() {
            r[i - dg + j] -= &c * gc;
        }
        q[i - dg] = c;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(zr().from_coeffs(q))
    } else {
        None
    }
}

/// One quadratic Hensel step: from `f = g h (mod m)` to the same identity mod `m^2`.
fn hensel_step(m: &BigInt, f: &ZPoly, g: &ZPoly, h: &ZPoly, s: &ZPoly, t: &ZPoly) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let r = zr();
    let m2 = m * m;
    let e = reduce(&r.sub(f, &r.mul(g, h)), &m2);
    let (q, rem) = r.divrem_monic(&reduce(&r.mul(s, &e), &m2), h);
    let (q, rem) = (reduce(&q, &m2), reduce(&rem, &m2));
    let g1 = reduce(&r.add(&r.add(g, &r.mul(t, &e)), &r.mul(&q, g)), &m2);
    let h1 = reduce(&r.add(h, &rem), &m2);
    let b = reduce(&r.sub(&r.add(&r.mul(s, &g1), &r.mul(t, &h1)), &r.one()), &m2);
    let (c, d) = r.divrem_monic(&reduce(&r.mul(s, &b), &m2), &h1);
    let s1 = reduce(&r.sub(s, &d), &m2);
    let t1 = reduce(&r.sub(&r.sub(t, &r.mul(t, &b)), &r.mul(&c, &g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lifts `f = lc(f) * prod(factors) (mod p)` to monic factors mod `p^k`.
fn multi_lift(f: &ZPoly, factors: &[Poly<u64>], fp: &Fp, k: u32) -> Vec<ZPoly> {
    let p = BigInt::from(fp.p());
    let target = p.pow(k);
    let lc = f.leading().unwrap().clone();
    if factors.len() == 1 {
        let inv = lc.modinv(&target).expect("leading coefficient invertible mod p");
        return vec![reduce(&zr().scale(f, &inv), &target)];
    }
    let pr = PolyRing::new(fp.clone());
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Poly<u64>]| fs.iter().fold(pr.one(), |a, b| pr.mul(&a, b));
    let g0 = pr.scale(&prod(left), &fp.from_int(&lc));
    let h0 = prod(right);
    let [one, s0, t0] = pr.ext_gcd(&g0, &h0);
    debug_assert_eq!(one, pr.one());
    let (mut g, mut h, mut s, mut t) = (from_fp(&g0), from_fp(&h0), from_fp(&s0), from_fp(&t0));
    let mut m = p.clone();
    while m < target {
        (g, h, s, t) = hensel_step(&m, f, &g, &h, &s, &t);
        m = &m * &m;
    }
    let g = reduce(&g, &target);
    let h = reduce(&h, &target);
    let mut out = multi_lift(&g, left, fp, k);
    out.extend(multi_lift(&h, right, fp, k));
    out
}

fn max_abs(f: &ZPoly) -> BigInt {
    f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Irreducible factors of a primitive square-free `f` with positive leading coefficient.
pub fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.clone()],
        Some(n) => n,
    };
    let lc = f.leading().unwrap().clone();
    let mut best: Option<(Fp, Vec<Poly<u64>>)> = None;
    let mut good = 0;
    for p in (3u64..2000).filter(|&p| is_prime(p)) {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = Fp::new(p).unwrap();
        let fbar = to_fp(f, &fp);
        let pr = PolyRing::new(fp.clone());
        if pr.gcd(&fbar, &pr.derivative(&fbar)).degree() != Some(0) {
            continue;
        }
        let facs: Vec<Poly<u64>> = fp.factor(&fbar).into_iter().map(|(g, _)| g).collect();
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
        good += 1;
        if good == 6 {
            break;
        }
    }
    let (fp, facs) = best.expect("a prime of good reduction exists");

    // |lc * g|_inf <= |lc| 2^n sqrt(n+1) |f|_inf for every factor g of f
    let bound = lc.abs() * (BigInt::one() << n) * BigInt::from(isqrt(n + 1) + 1) * max_abs(f);
    let p = BigInt::from(fp.p());
    let mut k = 1;
    let mut m = p.clone();
    while m <= &bound * 2 {
        m *= &p;
        k += 1;
    }
    let mut lifted = multi_lift(f, &facs, &fp, k);

    let r = zr();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), s) {
            let b = rest.leading().unwrap().clone();
            let g = subset
                .iter()
                .fold(r.constant(b), |acc, &i| reduce(&r.mul(&acc, &lifted[i]), &m));
            let g = primitive_part(&symmetric(&g, &m));
            if let Some(q) = div_exact(&rest, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => s += 1,
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(primitive_part(&rest));
    }
    out
}

fn isqrt(n: usize) -> usize {
    (0..=n).take_while(|k| k * k <= n).last().unwrap_or(0)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn to_i64_coeffs(f: &ZPoly) -> Option<Vec<i64>> {
    f.coeffs().iter().map(|c| c.to_i64()).collect()
}
