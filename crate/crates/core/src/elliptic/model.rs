//! Weierstrass models `y^2 = x^3 + A(t0,t1) x + B(t0,t1)` with `deg A = 8`,
//! `deg B = 12`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::form::{factor_places, BinaryForm, Place, Valuation};
use super::kodaira::{classify, KodairaType};
use crate::arithmetic::field::Fp;
use crate::error::{Error, Result};
use crate::poly::factor::Factorize;
use crate::ring::{Integers, Rationals, Ring};

pub const DEG_A: usize = 8;
pub const DEG_B: usize = 12;
pub const DEG_DELTA: usize = 24;
/// Euler number of a K3 surface.
pub const K3_EULER: u32 = 24;

/// Coefficient fields a model may live over.
pub trait ModelField: Factorize + PartialEq {
    /// A ring without denominators holding a scalar multiple of any equation.
    type Integral: Ring;

    fn integral_ring(&self) -> Self::Integral;
    /// Multiplies by a common nonzero scalar so that every entry is integral.
    fn clear_denominators(&self, coeffs: &[Self::Elem]) -> Vec<<Self::Integral as Ring>::Elem>;
    /// Integer representative, if the element has one.
    fn to_integer(&self, a: &Self::Elem) -> Option<BigInt>;
}

impl ModelField for Rationals {
    type Integral = Integers;

    fn integral_ring(&self) -> Integers {
        Integers
    }

    fn clear_denominators(&self, coeffs: &[BigRational]) -> Vec<BigInt> {
        let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect()
    }

    fn to_integer(&self, a: &BigRational) -> Option<BigInt> {
        a.is_integer().then(|| a.to_integer())
    }
}

impl ModelField for Fp {
    type Integral = Fp;

    fn integral_ring(&self) -> Fp {
        self.clone()
    }

    fn clear_denominators(&self, coeffs: &[u64]) -> Vec<u64> {
        coeffs.to_vec()
    }

    fn to_integer(&self, a: &u64) -> Option<BigInt> {
        Some(BigInt::from(self.symmetric(*a)))
    }
}

/// Discriminant data and fibre type at one place of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceData<E> {
    pub place: Place<E>,
    pub residue_degree: usize,
    pub va: Valuation,
    pub vb: Valuation,
    pub vdelta: u32,
    pub kodaira: KodairaType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerLedger<E> {
    pub places: Vec<PlaceData<E>>,
    pub total: u32,
}

impl<E> EulerLedger<E> {
    pub fn is_k3(&self) -> bool {
        self.total == K3_EULER
    }

    /// Number of geometric singular fibres of the given type.
    pub fn count(&self, t: KodairaType) -> usize {
        self.places
            .iter()
            .filter(|p| p.kodaira == t)
            .map(|p| p.residue_degree)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassModel<F: Ring> {
    field: F,
    a: BinaryForm<F::Elem>,
    b: BinaryForm<F::Elem>,
}

/// `-4A^3 - 27B^2`.
pub fn discriminant<F: Ring>(f: &F, a: &BinaryForm<F::Elem>, b: &BinaryForm<F::Elem>) -> BinaryForm<F::Elem> {
    let a3 = a.pow(f, 3).scale(f, &f.from_i64(-4));
    let b2 = b.pow(f, 2).scale(f, &f.from_i64(-27));
    a3.add(f, &b2).expect("both of degree 24")
}

pub fn check_characteristic(c: u64) -> Result<()> {
    if c == 2 || c == 3 {
        Err(Error::UnsupportedCharacteristic(c))
    } else {
        Ok(())
    }
}

impl<F: ModelField> WeierstrassModel<F> {
    /// Validates characteristic, degrees, `Delta != 0` and minimality.
    pub fn new(field: F, a: BinaryForm<F::Elem>, b: BinaryForm<F::Elem>) -> Result<Self> {
        check_characteristic(field.characteristic())?;
        if a.degree() != DEG_A || b.degree() != DEG_B {
            return Err(Error::InvalidArgument(format!(
                "A and B must have degrees {DEG_A} and {DEG_B}, got {} and {}",
                a.degree(),
                b.degree()
            )));
        }
        let model = WeierstrassModel { field, a, b };
        model.places()?;
        Ok(model)
    }

    pub fn from_coefficients(field: F, a: Vec<F::Elem>, b: Vec<F::Elem>) -> Result<Self> {
        let a = BinaryForm::new(&field, DEG_A, a)?;
        let b = BinaryForm::new(&field, DEG_B, b)?;
        Self::new(field, a, b)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn a(&self) -> &BinaryForm<F::Elem> {
        &self.a
    }

    pub fn b(&self) -> &BinaryForm<F::Elem> {
        &self.b
    }

    pub fn discriminant(&self) -> BinaryForm<F::Elem> {
        discriminant(&self.field, &self.a, &self.b)
    }

    /// Every place where `Delta` vanishes, with its Kodaira type.
    pub fn places(&self) -> Result<Vec<PlaceData<F::Elem>>> {
        let f = &self.field;
        let delta = self.discriminant();
        if delta.is_zero(f) {
            return Err(Error::NonReducedModel);
        }
        let mut out = Vec::new();
        for (place, vdelta) in factor_places(f, &delta)? {
            let va = self.a.valuation(f, &place);
            let vb = self.b.valuation(f, &place);
            let kodaira = classify(va, vb, vdelta, &place.format(f))?;
            out.push(PlaceData {
                residue_degree: place.residue_degree(),
                place,
                va,
                vb,
                vdelta,
                kodaira,
            });
        }
        Ok(out)
    }

    pub fn euler_ledger(&self) -> Result<EulerLedger<F::Elem>> {
        let places = self.places()?;
        let total = places
            .iter()
            .map(|p| p.residue_degree as u32 * p.kodaira.euler_number())
            .sum();
        Ok(EulerLedger { places, total })
    }

    /// The scalar `c` with `B = c * target`, if there is one.
    pub fn b_scalar(&self, target: &BinaryForm<F::Elem>) -> Option<F::Elem> {
        self.b.ratio(&self.field, target)
    }
}

impl WeierstrassModel<Rationals> {
    /// Reduction modulo a prime `p >= 5`; denominators must be prime to `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<WeierstrassModel<Fp>> {
        let fp = Fp::new(p)?;
        let red = |c: &BigRational| -> Result<u64> {
            let d = fp.from_int(c.denom());
            if d == 0 {
                return Err(Error::InvalidArgument(format!(
                    "coefficient {c} has {p} in its denominator"
                )));
            }
            Ok(fp.mul(&fp.from_int(c.numer()), &fp.pow(&d, p - 2)))
        };
        let a = self.a.coeffs().iter().map(red).collect::<Result<Vec<_>>>()?;
        let b = self.b.coeffs().iter().map(red).collect::<Result<Vec<_>>>()?;
        WeierstrassModel::from_coefficients(fp, a, b)
    }
}

impl WeierstrassModel<Fp> {
    /// Coefficients of `A` and `B` as residues, for point counting.
    pub fn residues(&self) -> (Vec<u64>, Vec<u64>) {
        (self.a.coeffs().to_vec(), self.b.coeffs().to_vec())
    }
}

/// `x66`: `y^2 = x^3 + t1^12 - t0^11 t1` over the rationals.
pub fn x66() -> WeierstrassModel<Rationals> {
    let q = |n: i64| BigRational::from_integer(n.into());
    let mut b = vec![q(0); DEG_B + 1];
    b[12] = q(1);
    b[1] = q(-1);
    WeierstrassModel::from_coefficients(Rationals, vec![], b).expect("x66 is a minimal K3 model")
}

/// `y66`: `y^2 = x^3 + t0 t1^11 - t0^11 t1` over `F_11`.
pub fn y66() -> WeierstrassModel<Fp> {
    let f = Fp::new(11).unwrap();
    let mut b = vec![0; DEG_B + 1];
    b[11] = 1;
    b[1] = f.from_i64(-1);
    WeierstrassModel::from_coefficients(f, vec![], b).expect("y66 is a minimal K3 model")
}

/// `x66` reduced to characteristic `p`, or over the rationals for `p = 0`.
pub fn x66_in_characteristic(p: u64) -> Result<Option<WeierstrassModel<Fp>>> {
    check_characteristic(p)?;
    if p == 0 {
        return Ok(None);
    }
    x66().reduce_mod(p).map(Some)
}

/// Integer value of a coefficient, used when serializing.
pub fn integer_coefficients<F: ModelField>(field: &F, form: &BinaryForm<F::Elem>) -> Vec<Option<i64>> {
    form.coeffs()
        .iter()
        .map(|c| field.to_integer(c).and_then(|n| n.to_i64()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x66_discriminant_and_ledger() {
        let x = x66();
        let d = x.discriminant();
        assert_eq!(d.degree(), DEG_DELTA);
        let ledger = x.euler_ledger().unwrap();
        assert!(ledger.is_k3());
        assert_eq!(ledger.count(KodairaType::II), 12);
        let degs: Vec<usize> = ledger.places.iter().map(|p| p.residue_degree).collect();
        assert_eq!(degs, vec![1, 1, 10]);
    }

    #[test]
    fn y66_ledger() {
        let y = y66();
        let ledger = y.euler_ledger().unwrap();
        assert_eq!(ledger.total, 24);
        assert_eq!(ledger.count(KodairaType::II), 12);
        assert_eq!(ledger.places.len(), 12);
        assert_eq!(ledger.places.last().unwrap().place, Place::Infinity);
    }

    #[test]
    fn rejects_bad_models() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let mut b = vec![q(0); 13];
        b[12] = q(1);
        let err = WeierstrassModel::from_coefficients(Rationals, vec![], b).unwrap_err();
        assert!(matches!(err, Error::NonMinimal { .. }));
        let err = WeierstrassModel::from_coefficients(Rationals, vec![], vec![]).unwrap_err();
        assert_eq!(err, Error::NonReducedModel);
        let f3 = Fp::new(3).unwrap();
        assert!(matches!(
            WeierstrassModel::from_coefficients(f3, vec![], vec![0, 1]),
            Err(Error::UnsupportedCharacteristic(3))
        ));
    }

    #[test]
    fn reduction() {
        let x7 = x66().reduce_mod(7).unwrap();
        assert_eq!(x7.euler_ledger().unwrap().total, 24);
        assert!(x66_in_characteristic(2).is_err());
    }

    #[test]
    fn a_only_model() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let a = BinaryForm::monomial(&Rationals, 8, 0, q(1));
        let b = BinaryForm::zero(&Rationals, 12);
        let d = discriminant(&Rationals, &a, &b);
        assert_eq!(d, BinaryForm::monomial(&Rationals, 24, 0, q(-4)));
        let m = WeierstrassModel::new(Rationals, a, b);
        // t0^8 x: the fibre at infinity has v(A) = 8, v(B) = inf, not minimal.
        assert!(matches!(m, Err(Error::NonMinimal { .. })));
    }
}
