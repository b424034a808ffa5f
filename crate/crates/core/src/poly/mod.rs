//! Dense univariate polynomials over a [`Ring`] descriptor.

pub mod factor;
pub mod integer;

use crate::ring::{Field, Ring};

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

#[derive(Clone, Debug)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero(&self) -> Poly<R::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn one(&self) -> Poly<R::Elem> {
        self.constant(self.base.one())
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); k + 1];
        v[k] = c;
        self.from_coeffs(v)
    }

    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn add(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        let v = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.base.add(x, y)
            })
            .collect();
        self.from_coeffs(v)
    }

    pub fn neg(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut v = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = self.base.add(&v[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(v)
    }

    pub fn pow(&self, a: &Poly<R::Elem>, mut e: u64) -> Poly<R::Elem> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn eval(&self, a: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        a.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    pub fn derivative(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        let v = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.base.mul(&self.base.from_i64(i as i64), c))
            .collect();
        self.from_coeffs(v)
    }

    /// Remainder modulo a monic polynomial; valid over any ring.
    pub fn divrem_monic(&self, a: &Poly<R::Elem>, m: &Poly<R::Elem>) -> (Poly<R::Elem>, Poly<R::Elem>) {
        let dm = m.degree().expect("division by zero polynomial");
        debug_assert!(m.leading().is_some_and(|l| *l == self.base.one()));
        let mut r = a.coeffs.clone();
        if r.len() <= dm {
            return (self.zero(), self.from_coeffs(r));
        }
        let mut q = vec![self.base.zero(); r.len() - dm];
        for i in (dm..r.len()).rev() {
            let c = r[i].clone();
            if self.base.is_zero(&c) {
                continue;
            }
            q[i - dm] = c.clone();
            for (j, mc) in m.coeffs.iter().enumerate() {
                let k = i - dm + j;
                r[k] = self.base.sub(&r[k], &self.base.mul(&c, mc));
            }
        }
        r.truncate(dm);
        (self.from_coeffs(q), self.from_coeffs(r))
    }

    /// `sum_i digits[i] * g^i` where every digit has degree below `deg g`.
    pub fn expand_in_base(&self, a: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Vec<Poly<R::Elem>> {
        let mut digits = Vec::new();
        let mut cur = a.clone();
        while !cur.is_zero() {
            let (q, r) = self.divrem_monic(&cur, g);
            digits.push(r);
            cur = q;
        }
        digits
    }

    pub fn format(&self, a: &Poly<R::Elem>, var: &str) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let cs = self.base.format(c);
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let term = if i == 0 {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if cs.contains(['+', ' ']) || cs[1..].contains('-') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            terms.push(term);
        }
        let mut out = String::new();
        for (k, t) in terms.iter().enumerate() {
            if k == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

impl<F: Field> PolyRing<F> {
    pub fn divrem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let lc_inv = self
            .base
            .inv(b.leading().expect("division by zero polynomial"))
            .expect("leading coefficient is a unit");
        let bm = self.scale(b, &lc_inv);
        let (q, r) = self.divrem_monic(a, &bm);
        (self.scale(&q, &lc_inv), r)
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(a, b).1
    }

    pub fn divides(&self, d: &Poly<F::Elem>, a: &Poly<F::Elem>) -> bool {
        self.rem(a, d).is_zero()
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading() {
            None => a.clone(),
            Some(l) => self.scale(a, &self.base.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic.
    pub fn ext_gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> [Poly<F::Elem>; 3] {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => [r0, s0, t0],
            Some(l) => {
                let li = self.base.inv(l).expect("nonzero leading coefficient");
                [self.scale(&r0, &li), self.scale(&s0, &li), self.scale(&t0, &li)]
            }
        }
    }

    pub fn pow_mod(&self, a: &Poly<F::Elem>, mut e: u64, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&self.one(), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m);
            }
        }
        acc
    }

    /// Multiplicity of the irreducible `p` in `a`; `None` when `a` is zero.
    pub fn valuation(&self, a: &Poly<F::Elem>, p: &Poly<F::Elem>) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut cur = a.clone();
        loop {
            let (q, r) = self.divrem(&cur, p);
            if !r.is_zero() {
                return Some(v);
            }
            v += 1;
            cur = q;
        }
    }
}
