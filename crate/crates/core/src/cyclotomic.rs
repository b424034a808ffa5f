//! Roots of unity, cyclotomic polynomials and the rings `R[x]/(Phi_n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{Integers, Ring};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Prime factorization as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).into_iter().map(|(p, e)| (p - 1) * p.pow(e - 1)).product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n)
        .take_while(|d| d * d <= n)
        .filter(|d| n.is_multiple_of(*d))
        .flat_map(|d| [d, n / d])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Sum of the primitive `n`-th roots of unity, i.e. the Moebius function.
pub fn primitive_root_sum(n: u64) -> i64 {
    assert!(n >= 1, "primitive_root_sum needs n >= 1");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicPolynomial {
    index: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicPolynomial {
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly<BigInt> {
        PolyRing::new(Integers).from_coeffs(self.coeffs.clone())
    }
}

impl fmt::Display for CyclotomicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&PolyRing::new(Integers).format(&self.to_poly(), "x"))
    }
}

/// `Phi_n`, by exact division of `x^n - 1` by the lower cyclotomic factors.
pub fn cyclotomic_polynomial(n: u64) -> Result<CyclotomicPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be positive".into()));
    }
    let zr = PolyRing::new(Integers);
    let mut cache: BTreeMap<u64, Poly<BigInt>> = BTreeMap::new();
    for d in divisors(n) {
        let mut num = zr.sub(&zr.monomial(BigInt::one(), d as usize), &zr.one());
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            let (q, r) = zr.divrem_monic(&num, &cache[&e]);
            debug_assert!(r.is_zero());
            num = q;
        }
        cache.insert(d, num);
    }
    let p = cache.remove(&n).unwrap();
    Ok(CyclotomicPolynomial {
        index: n,
        coeffs: p.into_coeffs(),
    })
}

/// `zeta_n^k`. Equality and hashing use the canonical reduced form.
#[derive(Clone, Copy, Debug)]
pub struct RootOfUnity {
    modulus: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(modulus: u64, exponent: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("root of unity modulus must be positive".into()));
        }
        Ok(RootOfUnity {
            modulus,
            exponent: exponent.rem_euclid(modulus as i64) as u64,
        })
    }

    pub fn one() -> Self {
        RootOfUnity {
            modulus: 1,
            exponent: 0,
        }
    }

    pub fn primitive(n: u64) -> Self {
        RootOfUnity::new(n, 1).expect("positive modulus")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.modulus / gcd(self.modulus, self.exponent)
    }

    /// `(d, j)` with `zeta_n^k = zeta_d^j`, `gcd(j, d) = 1`.
    pub fn canonical(&self) -> (u64, u64) {
        let g = gcd(self.modulus, self.exponent);
        (self.modulus / g, self.exponent / g)
    }

    /// Exponent of this root in terms of `zeta_n`, where `order | n`.
    pub fn exponent_in(&self, n: u64) -> Option<u64> {
        let (d, j) = self.canonical();
        n.is_multiple_of(d).then(|| j * (n / d))
    }

    /// `z<n>^<k>` with respect to `zeta_n`; `order` must divide `n`.
    pub fn format_in(&self, n: u64) -> String {
        match self.exponent_in(n) {
            Some(0) => "1".into(),
            Some(1) => format!("z{n}"),
            Some(k) => format!("z{n}^{k}"),
            None => self.to_string(),
        }
    }

    pub fn power(&self, k: i64) -> Self {
        let n = self.modulus as i128;
        let e = (self.exponent as i128 * k as i128).rem_euclid(n) as u64;
        RootOfUnity {
            modulus: self.modulus,
            exponent: e,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = lcm(self.modulus, other.modulus);
        let a = self.exponent * (n / self.modulus) + other.exponent * (n / other.modulus);
        RootOfUnity {
            modulus: n,
            exponent: a % n,
        }
    }

    pub fn inverse(&self) -> Self {
        self.power(-1)
    }

    /// All Galois conjugates, i.e. the primitive roots of the same order.
    pub fn conjugate_orbit(&self) -> Vec<RootOfUnity> {
        let d = self.order();
        (0..d)
            .filter(|&j| gcd(j, d) == 1)
            .map(|j| RootOfUnity {
                modulus: d,
                exponent: j,
            })
            .collect()
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for RootOfUnity {}

impl Hash for RootOfUnity {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootOfUnity {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical().cmp(&other.canonical())
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.canonical() {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (d, 1) => write!(f, "z{d}"),
            (d, j) => write!(f, "z{d}^{j}"),
        }
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("root of unity `{s}`"));
        match s {
            "1" => return Ok(RootOfUnity::one()),
            "-1" => return RootOfUnity::new(2, 1),
            _ => {}
        }
        let body = s.strip_prefix('z').ok_or_else(bad)?;
        let (n, k) = match body.split_once('^') {
            Some((n, k)) => (n, k.parse::<i64>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let n: u64 = n.parse().map_err(|_| bad())?;
        RootOfUnity::new(n, k)
    }
}

/// `R[x]/(Phi_n(x))`; the class of `x` is a primitive `n`-th root of unity.
#[derive(Clone, Debug)]
pub struct CyclotomicRing<R: Ring> {
    base: R,
    conductor: u64,
    modulus: Poly<R::Elem>,
}

/// Elements are stored in the power basis reduced modulo `Phi_n`.
pub type CyclotomicInteger = Poly<BigInt>;

impl<R: Ring> CyclotomicRing<R> {
    pub fn new(base: R, conductor: u64) -> Result<Self> {
        let phi = cyclotomic_polynomial(conductor)?;
        let pr = PolyRing::new(base.clone());
        let modulus = pr.from_coeffs(phi.coeffs().iter().map(|c| base.from_int(c)).collect());
        Ok(CyclotomicRing {
            base,
            conductor,
            modulus,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    fn polys(&self) -> PolyRing<R> {
        PolyRing::new(self.base.clone())
    }

    pub fn reduce(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.polys().divrem_monic(p, &self.modulus).1
    }

    pub fn embed(&self, c: &R::Elem) -> Poly<R::Elem> {
        self.polys().constant(c.clone())
    }

    /// Image of a root of unity whose order divides the conductor.
    pub fn root(&self, z: &RootOfUnity) -> Result<Poly<R::Elem>> {
        let k = z.exponent_in(self.conductor).ok_or_else(|| {
            Error::InvalidArgument(format!("{z} does not lie in the {}-th cyclotomic ring", self.conductor))
        })?;
        Ok(self.reduce(&self.polys().monomial(self.base.one(), k as usize)))
    }

    pub fn coefficients(&self, a: &Poly<R::Elem>) -> Vec<R::Elem> {
        let n = self.modulus.degree().unwrap();
        (0..n)
            .map(|i| a.coeff(i).cloned().unwrap_or_else(|| self.base.zero()))
            .collect()
    }

    /// `Some(c)` when the element lies in the image of the base ring.
    pub fn as_base(&self, a: &Poly<R::Elem>) -> Option<R::Elem> {
        match a.degree() {
            None => Some(self.base.zero()),
            Some(0) => a.coeff(0).cloned(),
            _ => None,
        }
    }
}

impl<R: Ring> Ring for CyclotomicRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.polys().zero()
    }
    fn one(&self) -> Self::Elem {
        self.polys().one()
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.polys().constant(self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.polys().add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.polys().neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(&self.polys().mul(a, b))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn format(&self, a: &Self::Elem) -> String {
        self.polys().format(a, &format!("z{}", self.conductor))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

impl CyclotomicRing<Integers> {
    pub fn as_integer(&self, a: &CyclotomicInteger) -> Option<BigInt> {
        self.as_base(a).or_else(|| a.is_zero().then(BigInt::zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1).unwrap().coeffs(), c(&[-1, 1]).as_slice());
        assert_eq!(cyclotomic_polynomial(6).unwrap().coeffs(), c(&[1, -1, 1]).as_slice());
        assert_eq!(cyclotomic_polynomial(66).unwrap().degree(), 20);
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn moebius_values() {
        assert_eq!(primitive_root_sum(66), -1);
        assert_eq!(primitive_root_sum(12), 0);
        assert_eq!(primitive_root_sum(1), 1);
        assert_eq!(primitive_root_sum(6), 1);
    }

    #[test]
    fn powers_of_zeta66() {
        let z = RootOfUnity::primitive(66);
        assert_eq!(z.power(33), RootOfUnity::new(2, 1).unwrap());
        assert_eq!(z.power(11).order(), 6);
        assert_eq!(z.power(66), RootOfUnity::one());
        assert_eq!(z.power(-1).to_string(), "z66^65");
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(RootOfUnity::primitive(6).conjugate_orbit().len(), 2);
        assert_eq!(RootOfUnity::primitive(66).conjugate_orbit().len(), 20);
        assert_eq!(RootOfUnity::one().conjugate_orbit(), vec![RootOfUnity::one()]);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["1", "-1", "z6", "z66^5", "z6^5"] {
            assert_eq!(s.parse::<RootOfUnity>().unwrap().to_string(), s);
        }
        assert_eq!("z12^2".parse::<RootOfUnity>().unwrap().to_string(), "z6");
        assert!("q3".parse::<RootOfUnity>().is_err());
    }

    #[test]
    fn ring_root_of_unity_relations() {
        let r = CyclotomicRing::new(Integers, 66).unwrap();
        let z = r.root(&RootOfUnity::primitive(66)).unwrap();
        assert_eq!(r.pow(&z, 33), r.from_i64(-1));
        assert_eq!(r.pow(&z, 66), r.one());
        assert!(r.root(&RootOfUnity::primitive(7)).is_err());
    }
}
