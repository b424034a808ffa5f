//! Naive point counting on Weierstrass K3 models over finite fields.

use std::fmt;

use crate::elliptic::WeierstrassModel;
use crate::error::{Error, Result};
use crate::ring::{FiniteField, Ring};

use super::field::Fp;

/// Legendre symbol generalized to `F_q`, by Euler's criterion.
pub fn quadratic_character<K: FiniteField>(field: &K, c: &K::Elem) -> Result<i8> {
    let q = field.order();
    if q.is_multiple_of(2) {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    if field.is_zero(c) {
        return Ok(0);
    }
    Ok(if field.pow(c, (q - 1) / 2) == field.one() {
        1
    } else {
        -1
    })
}

/// Tables of squares and cubes for repeated curve counts over one field.
#[derive(Clone, Debug)]
pub struct CurveCounter<K: FiniteField> {
    field: K,
    chi: Vec<i8>,
    xs: Vec<(K::Elem, K::Elem)>,
}

impl<K: FiniteField> CurveCounter<K> {
    pub fn new(field: K) -> Result<Self> {
        let q = field.order();
        if q.is_multiple_of(2) {
            return Err(Error::UnsupportedCharacteristic(2));
        }
        let mut chi = vec![-1i8; q as usize];
        chi[field.index(&field.zero()) as usize] = 0;
        let mut xs = Vec::with_capacity(q as usize);
        for x in field.elements() {
            if !field.is_zero(&x) {
                chi[field.index(&field.mul(&x, &x)) as usize] = 1;
            }
            let cube = field.mul(&x, &field.mul(&x, &x));
            xs.push((x, cube));
        }
        Ok(CurveCounter { field, chi, xs })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn chi(&self, c: &K::Elem) -> i8 {
        self.chi[self.field.index(c) as usize]
    }

    /// Projective points of `y^2 = x^3 + a x + b`, including the point at infinity.
    pub fn count(&self, a: &K::Elem, b: &K::Elem) -> u64 {
        let f = &self.field;
        let s: i64 = self
            .xs
            .iter()
            .map(|(x, x3)| self.chi(&f.add(&f.add(x3, &f.mul(a, x)), b)) as i64)
            .sum();
        (f.order() as i64 + 1 + s) as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiberKind {
    Smooth,
    Nodal,
    Cuspidal,
}

impl fmt::Display for FiberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiberKind::Smooth => "smooth",
            FiberKind::Nodal => "nodal",
            FiberKind::Cuspidal => "cuspidal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCount {
    pub base: String,
    pub count: u64,
    pub kind: FiberKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCountRecord {
    pub q: u64,
    pub total: u64,
    pub per_fiber: Vec<FiberCount>,
}

impl PointCountRecord {
    pub fn fibers_of(&self, kind: FiberKind) -> impl Iterator<Item = &FiberCount> {
        self.per_fiber.iter().filter(move |f| f.kind == kind)
    }

    /// Smooth fibres whose Frobenius trace violates `|a| <= 2 sqrt(q)`.
    pub fn hasse_violations(&self) -> Vec<&FiberCount> {
        self.fibers_of(FiberKind::Smooth)
            .filter(|f| !within_hasse(self.q, f.count))
            .collect()
    }
}

impl fmt::Display for PointCountRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kinds = [FiberKind::Smooth, FiberKind::Nodal, FiberKind::Cuspidal];
        let parts: Vec<String> = kinds
            .iter()
            .map(|k| format!("{} {k}", self.fibers_of(*k).count()))
            .collect();
        write!(f, "#X(F_{}) = {} ({})", self.q, self.total, parts.join(", "))
    }
}

/// `(q + 1 - N)^2 <= 4q`.
pub fn within_hasse(q: u64, n: u64) -> bool {
    let a = q as i128 + 1 - n as i128;
    a * a <= 4 * q as i128
}

fn fiber_kind<K: Ring>(k: &K, a: &K::Elem, b: &K::Elem) -> FiberKind {
    let a3 = k.mul(a, &k.mul(a, a));
    let delta = k.sub(&k.mul(&k.from_i64(-4), &a3), &k.mul(&k.from_i64(27), &k.mul(b, b)));
    if !k.is_zero(&delta) {
        FiberKind::Smooth
    } else if k.is_zero(a) {
        FiberKind::Cuspidal
    } else {
        FiberKind::Nodal
    }
}

fn eval_embedded<K: Ring>(k: &K, coeffs: &[K::Elem], t: &K::Elem) -> K::Elem {
    coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, t), c))
}

/// Fibre coefficients `(A(t), B(t))` at every point of `P^1(F_q)`, infinity last.
pub fn fibre_coefficients<K: FiniteField>(model: &WeierstrassModel<Fp>, field: &K) -> Vec<(String, K::Elem, K::Elem)> {
    let embed = |v: &[u64]| -> Vec<K::Elem> { v.iter().map(|&c| field.from_i64(c as i64)).collect() };
    let (a, b) = model.residues();
    let (a, b) = (embed(&a), embed(&b));
    let mut out: Vec<(String, K::Elem, K::Elem)> = field
        .elements()
        .map(|t| {
            (
                field.format(&t),
                eval_embedded(field, &a, &t),
                eval_embedded(field, &b, &t),
            )
        })
        .collect();
    out.push(("inf".into(), a.last().unwrap().clone(), b.last().unwrap().clone()));
    out
}

fn require_irreducible_fibres(model: &WeierstrassModel<Fp>, field_order: u64) -> Result<()> {
    if !field_order.is_multiple_of(model.characteristic()) {
        return Err(Error::InvalidArgument(format!(
            "F_{field_order} does not have characteristic {}",
            model.characteristic()
        )));
    }
    for place in model.euler_ledger()?.places {
        if !place.kodaira.is_irreducible() {
            return Err(Error::ReducibleFibre(place.kodaira.to_string()));
        }
    }
    Ok(())
}

/// Counts `F_q`-points of the surface, fibre by fibre over `P^1(F_q)`.
pub fn count_points<K: FiniteField>(model: &WeierstrassModel<Fp>, field: &K) -> Result<PointCountRecord> {
    require_irreducible_fibres(model, field.order())?;
    let counter = CurveCounter::new(field.clone())?;
    let per_fiber: Vec<FiberCount> = fibre_coefficients(model, field)
        .into_iter()
        .map(|(base, a, b)| FiberCount {
            kind: fiber_kind(field, &a, &b),
            count: counter.count(&a, &b),
            base,
        })
        .collect();
    Ok(PointCountRecord {
        q: field.order(),
        total: per_fiber.iter().map(|f| f.count).sum(),
        per_fiber,
    })
}

/// Frobenius traces of one smooth fibre over `F_q` and `F_{q^2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCheck {
    pub base: String,
    pub a_q: i64,
    pub a_q2: i64,
}

impl ExtensionCheck {
    /// `a_{q^2} = a_q^2 - 2q`.
    pub fn passes(&self, q: u64) -> bool {
        self.a_q2 == self.a_q * self.a_q - 2 * q as i64
    }
}

/// Recounts every smooth `F_q`-fibre over `F_{q^2}`.
pub fn extension_consistency<K1: FiniteField, K2: FiniteField>(
    model: &WeierstrassModel<Fp>,
    small: &K1,
    big: &K2,
    embed: impl Fn(&K1::Elem) -> K2::Elem,
) -> Result<Vec<ExtensionCheck>> {
    let q = small.order();
    if big.order() != q * q {
        return Err(Error::InvalidArgument(format!(
            "F_{} is not the quadratic extension of F_{q}",
            big.order()
        )));
    }
    require_irreducible_fibres(model, q)?;
    let c1 = CurveCounter::new(small.clone())?;
    let c2 = CurveCounter::new(big.clone())?;
    let mut out = Vec::new();
    for (base, a, b) in fibre_coefficients(model, small) {
        if fiber_kind(small, &a, &b) != FiberKind::Smooth {
            continue;
        }
        let n1 = c1.count(&a, &b) as i64;
        let n2 = c2.count(&embed(&a), &embed(&b)) as i64;
        out.push(ExtensionCheck {
            base,
            a_q: q as i64 + 1 - n1,
            a_q2: (q * q) as i64 + 1 - n2,
        });
    }
    Ok(out)
}

/// `1 + 22q + q^2`: the count when Frobenius acts on all of `H^2` as `q`.
pub fn supersingular_count_prediction(q: u64) -> u64 {
    1 + 22 * q + q * q
}
