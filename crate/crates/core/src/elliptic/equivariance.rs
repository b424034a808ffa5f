//! Diagonal automorphisms of Weierstrass models and their action on the
//! 2-form `dx ^ dt / y`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::model::{ModelField, WeierstrassModel};
use crate::cyclotomic::{gcd, lcm, CyclotomicRing, RootOfUnity};
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseMap {
    Scale(RootOfUnity),
    Translate(i64),
}

/// `(x, y, t) -> (zx * x, zy * y, base(t))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FibreAction {
    pub x: RootOfUnity,
    pub y: RootOfUnity,
    pub base: BaseMap,
}

impl FibreAction {
    pub fn identity() -> Self {
        FibreAction {
            x: RootOfUnity::one(),
            y: RootOfUnity::one(),
            base: BaseMap::Scale(RootOfUnity::one()),
        }
    }

    /// `(zeta_n^a x, zeta_n^b y, zeta_n^c t)`.
    pub fn diagonal(n: u64, a: i64, b: i64, c: i64) -> Result<Self> {
        Ok(FibreAction {
            x: RootOfUnity::new(n, a)?,
            y: RootOfUnity::new(n, b)?,
            base: BaseMap::Scale(RootOfUnity::new(n, c)?),
        })
    }

    pub fn pow(&self, k: u64) -> Self {
        FibreAction {
            x: self.x.power(k as i64),
            y: self.y.power(k as i64),
            base: match self.base {
                BaseMap::Scale(z) => BaseMap::Scale(z.power(k as i64)),
                BaseMap::Translate(s) => BaseMap::Translate(s * k as i64),
            },
        }
    }

    /// `self` after `other`; both must move the base the same way.
    pub fn compose(&self, other: &FibreAction) -> Result<Self> {
        let base = match (self.base, other.base) {
            (BaseMap::Scale(a), BaseMap::Scale(b)) => BaseMap::Scale(a.mul(&b)),
            (BaseMap::Translate(a), BaseMap::Translate(b)) => BaseMap::Translate(a + b),
            _ => return Err(Error::InvalidArgument("cannot compose scaling with translation".into())),
        };
        Ok(FibreAction {
            x: self.x.mul(&other.x),
            y: self.y.mul(&other.y),
            base,
        })
    }

    /// Multiplier of `dx ^ dt / y`.
    pub fn omega_multiplier(&self) -> RootOfUnity {
        let fibre = self.x.mul(&self.y.inverse());
        match self.base {
            BaseMap::Scale(z) => fibre.mul(&z),
            BaseMap::Translate(_) => fibre,
        }
    }

    /// Smallest `n` such that every root involved is an `n`-th root of unity.
    pub fn conductor(&self) -> u64 {
        let base = match self.base {
            BaseMap::Scale(z) => z.order(),
            BaseMap::Translate(_) => 1,
        };
        [self.x.order(), self.y.order(), base].into_iter().fold(1, lcm)
    }
}

impl fmt::Display for FibreAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let (x, y) = (self.x.format_in(n), self.y.format_in(n));
        match self.base {
            BaseMap::Scale(z) => write!(f, "({x}, {y}, {})", z.format_in(n)),
            BaseMap::Translate(s) => write!(f, "({x}, {y}, {s:+})"),
        }
    }
}

impl FromStr for FibreAction {
    type Err = Error;

    /// `(z66^2, z66^3, z66^6)` or `(z6^2, -1, +1)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("fibre action `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [x, y, t] = parts.as_slice() else {
            return Err(bad());
        };
        let base = if t.starts_with('+') || (t.starts_with('-') && *t != "-1") {
            BaseMap::Translate(t.parse().map_err(|_| bad())?)
        } else {
            BaseMap::Scale(t.parse()?)
        };
        Ok(FibreAction {
            x: x.parse()?,
            y: y.parse()?,
            base,
        })
    }
}

type Monomial = (u32, u32, u32);

fn monomial_name((i, j, k): Monomial) -> String {
    let parts: Vec<String> = [("x", i), ("y", j), ("t", k)]
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Terms of `y^2 - x^3 - A(t) x - B(t)` in affine coordinates `t = t1/t0`.
fn equation_terms<F: ModelField>(model: &WeierstrassModel<F>) -> Vec<(Monomial, F::Elem)> {
    let f = model.field();
    let mut terms = vec![((0, 2, 0), f.one()), ((3, 0, 0), f.from_i64(-1))];
    for (k, c) in model.a().coeffs().iter().enumerate() {
        terms.push(((1, 0, k as u32), f.neg(c)));
    }
    for (k, c) in model.b().coeffs().iter().enumerate() {
        terms.push(((0, 0, k as u32), f.neg(c)));
    }
    terms.retain(|(_, c)| !f.is_zero(c));
    terms
}

/// Checks that the substitution maps the equation to a scalar multiple of
/// itself and returns the multiplier of `dx ^ dt / y`.
///
/// Coefficients are compared exactly in `R[z]/(Phi_n)`, where `R` is the
/// integers (after clearing denominators) or the prime field.
pub fn verify_equivariance<F: ModelField>(model: &WeierstrassModel<F>, action: &FibreAction) -> Result<RootOfUnity> {
    let n = action.conductor();
    let p = model.characteristic();
    if p != 0 && gcd(n, p) != 1 {
        return Err(Error::InconsistentAction(format!(
            "roots of unity of order {n} do not exist in characteristic {p}"
        )));
    }
    let field = model.field();
    let terms = equation_terms(model);
    let coeffs: Vec<F::Elem> = terms.iter().map(|(_, c)| c.clone()).collect();
    let integral = field.clear_denominators(&coeffs);
    let base = field.integral_ring();
    let ring = CyclotomicRing::new(base.clone(), n)?;
    let zx = ring.root(&action.x)?;
    let zy = ring.root(&action.y)?;

    let mut original: BTreeMap<Monomial, _> = BTreeMap::new();
    let mut image: BTreeMap<Monomial, _> = BTreeMap::new();
    for (((i, j, k), _), c) in terms.iter().zip(&integral) {
        let c = ring.embed(c);
        original.insert((*i, *j, *k), c.clone());
        let fibre = ring.mul(&ring.pow(&zx, *i as u64), &ring.pow(&zy, *j as u64));
        let c = ring.mul(&c, &fibre);
        match action.base {
            BaseMap::Scale(z) => {
                let zt = ring.root(&z)?;
                let v = ring.mul(&c, &ring.pow(&zt, *k as u64));
                let slot = image.entry((*i, *j, *k)).or_insert_with(|| ring.zero());
                *slot = ring.add(slot, &v);
            }
            BaseMap::Translate(s) => {
                for l in 0..=*k {
                    let shift = BigInt::from(s).pow(k - l) * binomial(*k, l);
                    let v = ring.mul(&c, &ring.from_int(&shift));
                    let slot = image.entry((*i, *j, l)).or_insert_with(|| ring.zero());
                    *slot = ring.add(slot, &v);
                }
            }
        }
    }
    let lambda = ring.pow(&zy, 2);
    let keys: std::collections::BTreeSet<Monomial> = original.keys().chain(image.keys()).copied().collect();
    for key in keys.into_iter().rev() {
        let lhs = image.get(&key).cloned().unwrap_or_else(|| ring.zero());
        let rhs = original
            .get(&key)
            .map(|c| ring.mul(&lambda, c))
            .unwrap_or_else(|| ring.zero());
        if lhs != rhs {
            return Err(Error::NonEquivariant {
                monomial: monomial_name(key),
            });
        }
    }
    Ok(action.omega_multiplier())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::model::{x66, y66};

    fn g66() -> FibreAction {
        FibreAction::diagonal(66, 2, 3, 6).unwrap()
    }

    fn h66() -> FibreAction {
        FibreAction {
            x: RootOfUnity::new(6, 2).unwrap(),
            y: RootOfUnity::new(6, 3).unwrap(),
            base: BaseMap::Translate(1),
        }
    }

    #[test]
    fn x66_multiplier() {
        let m = verify_equivariance(&x66(), &g66()).unwrap();
        assert_eq!(m, RootOfUnity::new(66, 5).unwrap());
        let m11 = verify_equivariance(&x66(), &g66().pow(11)).unwrap();
        assert_eq!(m11, RootOfUnity::new(66, 55).unwrap());
    }

    #[test]
    fn y66_multiplier() {
        let m = verify_equivariance(&y66(), &h66()).unwrap();
        assert_eq!(m, RootOfUnity::new(6, -1).unwrap());
        assert_eq!(
            verify_equivariance(&y66(), &h66().pow(11)).unwrap(),
            RootOfUnity::primitive(6)
        );
    }

    #[test]
    fn identity_and_failures() {
        assert_eq!(
            verify_equivariance(&x66(), &FibreAction::identity()).unwrap(),
            RootOfUnity::one()
        );
        let bad = FibreAction::diagonal(66, 2, 3, 5).unwrap();
        assert!(matches!(
            verify_equivariance(&x66(), &bad),
            Err(Error::NonEquivariant { .. })
        ));
        let bad_translate = FibreAction {
            base: BaseMap::Translate(1),
            ..g66()
        };
        assert!(verify_equivariance(&x66(), &bad_translate).is_err());
    }

    #[test]
    fn composition_multiplies_multipliers() {
        let g = g66();
        let g2 = g.compose(&g).unwrap();
        let m = verify_equivariance(&x66(), &g2).unwrap();
        assert_eq!(m, g.omega_multiplier().power(2));
    }

    #[test]
    fn text_roundtrip() {
        for a in [g66(), h66(), FibreAction::identity()] {
            assert_eq!(a.to_string().parse::<FibreAction>().unwrap(), a);
        }
        assert_eq!(g66().to_string(), "(z66^2, z66^3, z66^6)");
        assert_eq!(h66().to_string(), "(z6^2, z6^3, +1)");
    }
}
