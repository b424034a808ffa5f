//! Prime fields `F_p` and quadratic extensions `F[w]/(w^2 - r)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ring::{mod_floor, Field, FiniteField, Ring};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidArgument(format!("prime {p} too large")));
        }
        Ok(Fp { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Ring for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        mod_floor(n, &BigInt::from(self.p)).to_u64().unwrap()
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
}

impl Field for Fp {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
}

impl FiniteField for Fp {
    fn order(&self) -> u64 {
        self.p
    }
    fn element(&self, index: u64) -> u64 {
        index
    }
    fn index(&self, a: &u64) -> u64 {
        *a
    }
    fn pth_root(&self, a: &u64) -> u64 {
        *a
    }
}

/// `F[w]/(w^2 - r)` with `r` the first non-square of `F` in enumeration order.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExt<F: FiniteField> {
    base: F,
    nonresidue: F::Elem,
    var: &'static str,
}

impl<F: FiniteField> QuadExt<F> {
    pub fn over(base: F, var: &'static str) -> Result<Self> {
        let q = base.order();
        if q.is_multiple_of(2) {
            return Err(Error::UnsupportedCharacteristic(2));
        }
        let nonresidue = (1..q)
            .map(|i| base.element(i))
            .find(|a| !base.is_zero(a) && base.pow(a, (q - 1) / 2) != base.one())
            .expect("odd-order field has a non-square");
        Ok(QuadExt { base, nonresidue, var })
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn nonresidue(&self) -> &F::Elem {
        &self.nonresidue
    }

    pub fn embed(&self, a: &F::Elem) -> (F::Elem, F::Elem) {
        (a.clone(), self.base.zero())
    }

    pub fn generator(&self) -> (F::Elem, F::Elem) {
        (self.base.zero(), self.base.one())
    }
}

impl<F: FiniteField> Ring for QuadExt<F> {
    type Elem = (F::Elem, F::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.zero())
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        (self.base.from_int(n), self.base.zero())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.sub(&a.0, &b.0), self.base.sub(&a.1, &b.1))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        let re = f.add(&f.mul(&a.0, &b.0), &f.mul(&self.nonresidue, &f.mul(&a.1, &b.1)));
        let im = f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0));
        (re, im)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn format(&self, a: &Self::Elem) -> String {
        let f = &self.base;
        let wrap = |s: String| {
            if s.contains('+') {
                format!("({s})")
            } else {
                s
            }
        };
        if f.is_zero(&a.1) {
            return f.format(&a.0);
        }
        let im = if a.1 == f.one() {
            self.var.to_string()
        } else {
            format!("{}*{}", wrap(f.format(&a.1)), self.var)
        };
        if f.is_zero(&a.0) {
            im
        } else {
            format!("{}+{}", wrap(f.format(&a.0)), im)
        }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.0) && self.base.is_zero(&a.1)
    }
}

impl<F: FiniteField> Field for QuadExt<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let f = &self.base;
        let norm = f.sub(&f.mul(&a.0, &a.0), &f.mul(&self.nonresidue, &f.mul(&a.1, &a.1)));
        let ni = f.inv(&norm)?;
        Some((f.mul(&a.0, &ni), f.neg(&f.mul(&a.1, &ni))))
    }
}

impl<F: FiniteField> FiniteField for QuadExt<F> {
    fn order(&self) -> u64 {
        let q = self.base.order();
        q * q
    }
    fn element(&self, index: u64) -> Self::Elem {
        let q = self.base.order();
        (self.base.element(index % q), self.base.element(index / q))
    }
    fn index(&self, a: &Self::Elem) -> u64 {
        self.base.index(&a.0) + self.base.order() * self.base.index(&a.1)
    }
}

/// `F_{p^2}`, built as `F_p[s]/(s^2 - r)`.
pub type Fp2 = QuadExt<Fp>;
/// `F_{p^4}`, built as `F_{p^2}[w]/(w^2 - rho)`.
pub type Fp4 = QuadExt<Fp2>;

pub fn fp2(p: u64) -> Result<Fp2> {
    QuadExt::over(Fp::new(p)?, "s")
}

pub fn fp4(p: u64) -> Result<Fp4> {
    QuadExt::over(fp2(p)?, "w")
}

/// Least generator of the multiplicative group in enumeration order.
pub fn multiplicative_generator<F: FiniteField>(field: &F) -> F::Elem {
    let q = field.order();
    let n = q - 1;
    let primes = prime_factors(n);
    (1..q)
        .map(|i| field.element(i))
        .find(|g| !field.is_zero(g) && primes.iter().all(|&l| field.pow(g, n / l) != field.one()))
        .expect("finite field has a primitive element")
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f121_uses_two_as_nonresidue() {
        let f = fp2(11).unwrap();
        assert_eq!(*f.nonresidue(), 2);
        assert_eq!(f.order(), 121);
    }

    #[test]
    fn inverses_in_f_p4() {
        let f = fp4(11).unwrap();
        for i in [1u64, 7, 122, 5000, 14640] {
            let a = f.element(i);
            let b = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &b), f.one());
        }
    }

    #[test]
    fn index_roundtrip() {
        let f = fp2(7).unwrap();
        for i in 0..49 {
            assert_eq!(f.index(&f.element(i)), i);
        }
    }

    #[test]
    fn generator_has_full_order() {
        let f = fp2(11).unwrap();
        let g = multiplicative_generator(&f);
        let mut x = g;
        let mut k = 1;
        while x != f.one() {
            x = f.mul(&x, &g);
            k += 1;
        }
        assert_eq!(k, 120);
    }

    #[test]
    fn rejects_composite() {
        assert!(Fp::new(65).is_err());
    }
}
