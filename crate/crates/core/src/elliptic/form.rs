//! Binary forms in `(t0, t1)` and their places.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::factor::Factorize;
use crate::poly::{Poly, PolyRing};
use crate::ring::{Field, Ring};

/// A homogeneous form of fixed degree; `coeffs[i]` multiplies `t0^(d-i) t1^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm<E> {
    degree: usize,
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + fmt::Debug> BinaryForm<E> {
    /// Missing trailing coefficients are zero.
    pub fn new<F: Ring<Elem = E>>(field: &F, degree: usize, mut coeffs: Vec<E>) -> Result<Self> {
        if coeffs.len() > degree + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for a form of degree {degree}",
                coeffs.len()
            )));
        }
        coeffs.resize(degree + 1, field.zero());
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn zero<F: Ring<Elem = E>>(field: &F, degree: usize) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![field.zero(); degree + 1],
        }
    }

    /// `c * t0^(d-k) * t1^k`.
    pub fn monomial<F: Ring<Elem = E>>(field: &F, degree: usize, k: usize, c: E) -> Self {
        let mut f = Self::zero(field, degree);
        f.coeffs[k] = c;
        f
    }

    pub fn from_affine<F: Ring<Elem = E>>(field: &F, degree: usize, p: &Poly<E>) -> Result<Self> {
        Self::new(field, degree, p.coeffs().to_vec())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &E {
        &self.coeffs[k]
    }

    pub fn is_zero<F: Ring<Elem = E>>(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    /// `f(1, t)`.
    pub fn affine<F: Ring<Elem = E>>(&self, field: &F) -> Poly<E> {
        PolyRing::new(field.clone()).from_coeffs(self.coeffs.clone())
    }

    /// `f(s, 1)`, the chart at `t = infinity`.
    pub fn at_infinity<F: Ring<Elem = E>>(&self, field: &F) -> Poly<E> {
        PolyRing::new(field.clone()).from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn add<F: Ring<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::InvalidArgument("adding forms of different degree".into()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| field.add(a, b))
            .collect();
        Ok(BinaryForm {
            degree: self.degree,
            coeffs,
        })
    }

    pub fn scale<F: Ring<Elem = E>>(&self, field: &F, c: &E) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| field.mul(a, c)).collect(),
        }
    }

    pub fn mul<F: Ring<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut coeffs = vec![field.zero(); self.degree + other.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(&coeffs[i + j], &field.mul(a, b));
            }
        }
        BinaryForm {
            degree: self.degree + other.degree,
            coeffs,
        }
    }

    pub fn pow<F: Ring<Elem = E>>(&self, field: &F, e: u32) -> Self {
        let mut acc = Self::monomial(field, 0, 0, field.one());
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    /// `Some(c)` with `self = c * other` and `c != 0`.
    pub fn ratio<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Option<E> {
        if self.degree != other.degree {
            return None;
        }
        let k = other.coeffs.iter().position(|c| !field.is_zero(c))?;
        let c = field.div(&self.coeffs[k], &other.coeffs[k])?;
        if field.is_zero(&c) {
            return None;
        }
        let same = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| *a == field.mul(&c, b));
        same.then_some(c)
    }

    pub fn format<F: Ring<Elem = E>>(&self, field: &F) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let mono: Vec<String> = [("t0", self.degree - i), ("t1", i)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            let mono = mono.join("*");
            let cs = field.format(c);
            let term = match (cs.as_str(), mono.is_empty()) {
                (_, true) => cs.clone(),
                ("1", _) => mono,
                ("-1", _) => format!("-{mono}"),
                _ if cs.contains(['/', ' ']) => format!("({cs})*{mono}"),
                _ => format!("{cs}*{mono}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        out
    }
}

/// A closed point of `P^1`: a monic irreducible `pi(t)` or `t = infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place<E> {
    Finite(Poly<E>),
    Infinity,
}

impl<E: Clone + PartialEq + fmt::Debug> Place<E> {
    pub fn residue_degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn format<F: Ring<Elem = E>>(&self, field: &F) -> String {
        match self {
            Place::Finite(p) => PolyRing::new(field.clone()).format(p, "t"),
            Place::Infinity => "inf".into(),
        }
    }
}

/// Order of vanishing; `Infinite` for the zero form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn at_least(&self, k: u32) -> bool {
        match self {
            Valuation::Finite(v) => *v >= k,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl<E: Clone + PartialEq + fmt::Debug> BinaryForm<E> {
    pub fn valuation<F: Field<Elem = E>>(&self, field: &F, place: &Place<E>) -> Valuation {
        if self.is_zero(field) {
            return Valuation::Infinite;
        }
        match place {
            Place::Infinity => {
                let d = self.affine(field).degree().unwrap();
                Valuation::Finite((self.degree - d) as u32)
            }
            Place::Finite(p) => {
                let pr = PolyRing::new(field.clone());
                Valuation::Finite(pr.valuation(&self.affine(field), p).unwrap())
            }
        }
    }
}

/// Irreducible factorization of a form as places with multiplicities;
/// finite places in canonical order, then infinity.
pub fn factor_places<F: Factorize>(field: &F, f: &BinaryForm<F::Elem>) -> Result<Vec<(Place<F::Elem>, u32)>> {
    if f.is_zero(field) {
        return Err(Error::InvalidArgument("cannot factor the zero form".into()));
    }
    let aff = f.affine(field);
    let mut out: Vec<(Place<F::Elem>, u32)> = if aff.degree() == Some(0) {
        Vec::new()
    } else {
        field
            .factor(&aff)
            .into_iter()
            .map(|(p, m)| (Place::Finite(p), m))
            .collect()
    };
    let at_inf = f.degree() - aff.degree().unwrap();
    if at_inf > 0 {
        out.push((Place::Infinity, at_inf as u32));
    }
    Ok(out)
}

/// Rebuilds the form from its places, up to the leading unit.
pub fn expand_places<F: Field>(field: &F, degree: usize, places: &[(Place<F::Elem>, u32)]) -> BinaryForm<F::Elem> {
    let mut acc = BinaryForm::monomial(field, 0, 0, field.one());
    for (place, m) in places {
        let f = match place {
            Place::Infinity => BinaryForm::monomial(field, 1, 0, field.one()),
            Place::Finite(p) => BinaryForm::from_affine(field, p.degree().unwrap(), p).unwrap(),
        };
        acc = acc.mul(field, &f.pow(field, *m));
    }
    debug_assert_eq!(acc.degree(), degree);
    acc
}
