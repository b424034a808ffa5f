//! Irreducible factorization over finite fields and over the rationals.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{integer, Poly, PolyRing};
use crate::ring::{Field, FiniteField, Rationals};

/// Fields over which monic polynomials can be split into irreducibles.
pub trait Factorize: Field {
    /// Monic irreducible factors with multiplicities, in a canonical order.
    /// The input must be nonzero; its leading coefficient is discarded.
    fn factor(&self, f: &Poly<Self::Elem>) -> Vec<(Poly<Self::Elem>, u32)>;
}

impl<F: FiniteField> Factorize for F {
    fn factor(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, u32)> {
        let pr = PolyRing::new(self.clone());
        let f = pr.monic(f);
        let mut rng = ChaCha8Rng::seed_from_u64(0x6606_6606);
        let mut out = Vec::new();
        for (part, mult) in square_free_finite(&pr, &f) {
            for (block, d) in distinct_degree(&pr, &part) {
                for irr in equal_degree(&pr, &block, d, &mut rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by_key(|(g, m)| {
            (
                g.degree(),
                g.coeffs().iter().rev().map(|c| self.index(c)).collect::<Vec<_>>(),
                *m,
            )
        });
        out
    }
}

impl Factorize for Rationals {
    fn factor(&self, f: &Poly<BigRational>) -> Vec<(Poly<BigRational>, u32)> {
        let pr = PolyRing::new(Rationals);
        let mut out = Vec::new();
        for (part, mult) in square_free_char0(&pr, &pr.monic(f)) {
            let prim = integer::primitive_from_rational(&part);
            for g in integer::factor_squarefree(&prim) {
                let monic = pr.monic(&integer::to_rational(&g));
                out.push((monic, mult));
            }
        }
        out.sort_by(|(a, ma), (b, mb)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
                .then(ma.cmp(mb))
        });
        out
    }
}

/// Yun's algorithm; characteristic zero only.
pub fn square_free_char0<F: Field>(pr: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = pr.derivative(f);
    let a0 = pr.gcd(f, &d);
    let mut b = pr.divrem(f, &a0).0;
    let mut c = pr.divrem(&d, &a0).0;
    let mut dd = pr.sub(&c, &pr.derivative(&b));
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = pr.gcd(&b, &dd);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = pr.divrem(&b, &a).0;
        c = pr.divrem(&dd, &a).0;
        dd = pr.sub(&c, &pr.derivative(&b));
        i += 1;
    }
    out
}

/// Square-free decomposition of a monic polynomial over `F_q`.
pub fn square_free_finite<F: FiniteField>(pr: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, u32)> {
    let field = pr.base();
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = pr.gcd(f, &pr.derivative(f));
    let mut w = pr.divrem(f, &c).0;
    let mut i = 1u32;
    while w.degree().unwrap_or(0) > 0 {
        let y = pr.gcd(&w, &c);
        let fac = pr.divrem(&w, &y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y.clone();
        c = pr.divrem(&c, &y).0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let root: Vec<F::Elem> = c.coeffs().iter().step_by(p).map(|a| field.pth_root(a)).collect();
        let root = pr.from_coeffs(root);
        for (g, m) in square_free_finite(pr, &root) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Splits a square-free monic polynomial into products of equal-degree irreducibles.
pub fn distinct_degree<F: FiniteField>(pr: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let q = pr.base().order();
    let x = pr.x();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = pr.pow_mod(&h, q, &rest);
        let g = pr.gcd(&pr.sub(&h, &x), &rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = pr.divrem(&rest, &g).0;
            h = pr.rem(&h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, d));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of degree-`d` irreducibles (odd `q`).
pub fn equal_degree<F: FiniteField, G: Rng>(
    pr: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut G,
) -> Vec<Poly<F::Elem>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let field = pr.base();
    let q = field.order();
    loop {
        let a: Vec<F::Elem> = (0..n).map(|_| field.element(rng.gen_range(0..q))).collect();
        let a = pr.from_coeffs(a);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // a^((q^d - 1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2)
        let mut frob = pr.rem(&a, f);
        let mut norm = frob.clone();
        for _ in 1..d {
            frob = pr.pow_mod(&frob, q, f);
            norm = pr.rem(&pr.mul(&norm, &frob), f);
        }
        let b = pr.pow_mod(&norm, (q - 1) / 2, f);
        let u = pr.gcd(&pr.sub(&b, &pr.one()), f);
        let du = u.degree().unwrap_or(0);
        if du > 0 && du < n {
            let v = pr.divrem(f, &u).0;
            let mut out = equal_degree(pr, &u, d, rng);
            out.extend(equal_degree(pr, &v, d, rng));
            return out;
        }
    }
}

/// Reassembles a factorization; used to check round trips.
pub fn expand<F: Field>(pr: &PolyRing<F>, factors: &[(Poly<F::Elem>, u32)]) -> Poly<F::Elem> {
    factors
        .iter()
        .fold(pr.one(), |acc, (g, m)| pr.mul(&acc, &pr.pow(g, *m as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::field::{fp2, Fp};
    use crate::ring::Ring;

    fn qpoly(c: &[i64]) -> Poly<BigRational> {
        PolyRing::new(Rationals).from_coeffs(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn t11_minus_t_splits_over_f11() {
        let f = Fp::new(11).unwrap();
        let pr = PolyRing::new(f.clone());
        let mut c = vec![0u64; 12];
        c[11] = 1;
        c[1] = 10;
        let g = pr.from_coeffs(c);
        let fac = f.factor(&g);
        assert_eq!(fac.len(), 11);
        assert!(fac.iter().all(|(h, m)| h.degree() == Some(1) && *m == 1));
    }

    #[test]
    fn cyclotomic_11_over_q_is_irreducible() {
        let f = qpoly(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fac = Rationals.factor(&f);
        let degs: Vec<_> = fac.iter().map(|(g, _)| g.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 10]);
    }

    #[test]
    fn repeated_factors_over_q() {
        // (x^2 - 2)^2 (x + 3)^3
        let pr = PolyRing::new(Rationals);
        let a = qpoly(&[-2, 0, 1]);
        let b = qpoly(&[3, 1]);
        let f = pr.mul(&pr.pow(&a, 2), &pr.pow(&b, 3));
        let fac = Rationals.factor(&f);
        assert_eq!(fac, vec![(b, 3), (a, 2)]);
    }

    #[test]
    fn pth_power_over_f121() {
        // (x^11 + s)^2 * x over F_121: requires the p-th root branch
        let f = fp2(11).unwrap();
        let pr = PolyRing::new(f.clone());
        let s = f.generator();
        let g = pr.add(&pr.monomial(f.one(), 11), &pr.constant(s));
        let h = pr.mul(&pr.pow(&g, 2), &pr.x());
        let fac = f.factor(&h);
        assert_eq!(expand(&pr, &fac), h);
        assert!(fac.iter().all(|(_, m)| *m == 1 || *m == 22));
    }
}
