//! TOML fixture format for Weierstrass models.
//!
//! ```toml
//! name = "x66"
//! characteristic = 0
//! a = []
//! b = [0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]
//! ```
//!
//! Entry `i` of `a`/`b` is the coefficient of `t0^(d-i) t1^i`; missing
//! entries are zero. Rational entries are written as strings (`"1/2"`).

use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::model::{self, WeierstrassModel};
use crate::arithmetic::field::Fp;
use crate::error::{Error, Result};
use crate::ring::{format_rational, parse_rational, Field, Rationals, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            Coefficient::Int(n) => Ok(BigRational::from_integer((*n).into())),
            Coefficient::Text(s) => parse_rational(s).ok_or_else(|| Error::Parse(format!("coefficient `{s}`"))),
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        match i64::try_from(q.to_integer()) {
            Ok(n) if q.is_integer() => Coefficient::Int(n),
            _ => Coefficient::Text(format_rational(q)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFixture {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub characteristic: u64,
    #[serde(default)]
    pub a: Vec<Coefficient>,
    #[serde(default)]
    pub b: Vec<Coefficient>,
}

impl ModelFixture {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("fixture: {e}")))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("fixture serializes")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "x66" => Some(AnyModel::Rational(model::x66()).to_fixture(Some("x66"))),
            "y66" => Some(AnyModel::Prime(model::y66()).to_fixture(Some("y66"))),
            _ => None,
        }
    }

    /// A built-in name or a path to a TOML file.
    pub fn resolve(name: &str) -> Result<Self> {
        match Self::builtin(name) {
            Some(f) => Ok(f),
            None => Self::load(Path::new(name)),
        }
    }

    pub fn build(&self) -> Result<AnyModel> {
        let a = self
            .a
            .iter()
            .map(Coefficient::to_rational)
            .collect::<Result<Vec<_>>>()?;
        let b = self
            .b
            .iter()
            .map(Coefficient::to_rational)
            .collect::<Result<Vec<_>>>()?;
        match self.characteristic {
            0 => Ok(AnyModel::Rational(WeierstrassModel::from_coefficients(
                Rationals, a, b,
            )?)),
            p => {
                model::check_characteristic(p)?;
                let fp = Fp::new(p)?;
                let red = |v: &[BigRational]| -> Result<Vec<u64>> {
                    v.iter()
                        .map(|c| {
                            fp.div(&fp.from_int(c.numer()), &fp.from_int(c.denom())).ok_or_else(|| {
                                Error::InvalidArgument(format!("coefficient {c} is not defined mod {p}"))
                            })
                        })
                        .collect()
                };
                let (a, b) = (red(&a)?, red(&b)?);
                Ok(AnyModel::Prime(WeierstrassModel::from_coefficients(fp, a, b)?))
            }
        }
    }
}

/// A model over the rationals or over a prime field.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyModel {
    Rational(WeierstrassModel<Rationals>),
    Prime(WeierstrassModel<Fp>),
}

fn coefficients<E>(coeffs: &[E], to_q: impl Fn(&E) -> BigRational) -> Vec<Coefficient> {
    let mut v: Vec<Coefficient> = coeffs.iter().map(|c| Coefficient::from_rational(&to_q(c))).collect();
    while v.last() == Some(&Coefficient::Int(0)) {
        v.pop();
    }
    v
}

impl AnyModel {
    pub fn characteristic(&self) -> u64 {
        match self {
            AnyModel::Rational(_) => 0,
            AnyModel::Prime(m) => m.characteristic(),
        }
    }

    pub fn to_fixture(&self, name: Option<&str>) -> ModelFixture {
        let (a, b) = match self {
            AnyModel::Rational(m) => (
                coefficients(m.a().coeffs(), |c| c.clone()),
                coefficients(m.b().coeffs(), |c| c.clone()),
            ),
            AnyModel::Prime(m) => {
                let f = m.field().clone();
                let to_q = |c: &u64| BigRational::from_integer(f.symmetric(*c).into());
                (coefficients(m.a().coeffs(), to_q), coefficients(m.b().coeffs(), to_q))
            }
        };
        ModelFixture {
            name: name.map(str::to_string),
            characteristic: self.characteristic(),
            a,
            b,
        }
    }
}
