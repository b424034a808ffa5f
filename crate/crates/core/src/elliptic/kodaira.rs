//! Kodaira fibre types from valuations, residue characteristic 0 or >= 5.

use std::fmt;
use std::str::FromStr;

use super::form::Valuation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub const I0: KodairaType = KodairaType::I(0);

    pub fn euler_number(&self) -> u32 {
        match self {
            KodairaType::I(n) => *n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IStar(n) => n + 6,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Types whose fibre is an irreducible curve.
    pub fn is_irreducible(&self) -> bool {
        matches!(self, KodairaType::I(0) | KodairaType::I(1) | KodairaType::II)
    }

    pub fn is_smooth(&self) -> bool {
        *self == KodairaType::I0
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("Kodaira type `{s}`"));
        Ok(match s {
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                let body = s.strip_prefix('I').ok_or_else(bad)?;
                match body.strip_suffix('*') {
                    Some(n) => KodairaType::IStar(n.parse().map_err(|_| bad())?),
                    None => KodairaType::I(body.parse().map_err(|_| bad())?),
                }
            }
        })
    }
}

/// Table lookup on `(v(A), v(B), v(Delta))` for `y^2 = x^3 + Ax + B`.
pub fn classify(va: Valuation, vb: Valuation, vdelta: u32, place: &str) -> Result<KodairaType> {
    use Valuation::Finite;
    if vdelta == 0 {
        return Ok(KodairaType::I0);
    }
    if va == Finite(0) {
        return Ok(KodairaType::I(vdelta));
    }
    let ge = |v: Valuation, k| v.at_least(k);
    let eq = |v: Valuation, k| v == Finite(k);
    let t = if eq(vb, 1) {
        KodairaType::II
    } else if eq(va, 1) {
        KodairaType::III
    } else if eq(vb, 2) {
        KodairaType::IV
    } else if eq(va, 2) || eq(vb, 3) {
        KodairaType::IStar(
            vdelta
                .checked_sub(6)
                .ok_or_else(|| Error::InvalidArgument(format!("inconsistent valuations at {place}")))?,
        )
    } else if eq(vb, 4) {
        KodairaType::IVStar
    } else if eq(va, 3) {
        KodairaType::IIIStar
    } else if eq(vb, 5) {
        KodairaType::IIStar
    } else {
        debug_assert!(ge(va, 4) && ge(vb, 6));
        return Err(Error::NonMinimal {
            place: place.to_string(),
            va: va.to_string(),
            vb: vb.to_string(),
        });
    };
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Valuation::{Finite, Infinite};

    #[test]
    fn table_rows() {
        assert_eq!(classify(Finite(0), Finite(0), 1, "p").unwrap(), KodairaType::I(1));
        assert_eq!(classify(Finite(1), Finite(2), 3, "p").unwrap(), KodairaType::III);
        assert_eq!(classify(Infinite, Finite(1), 2, "p").unwrap(), KodairaType::II);
        assert_eq!(classify(Infinite, Finite(2), 4, "p").unwrap(), KodairaType::IV);
        assert_eq!(classify(Finite(2), Finite(3), 8, "p").unwrap(), KodairaType::IStar(2));
        assert_eq!(classify(Infinite, Finite(4), 8, "p").unwrap(), KodairaType::IVStar);
        assert_eq!(classify(Finite(3), Infinite, 9, "p").unwrap(), KodairaType::IIIStar);
        assert_eq!(classify(Infinite, Finite(5), 10, "p").unwrap(), KodairaType::IIStar);
        assert!(matches!(
            classify(Infinite, Finite(6), 12, "p"),
            Err(Error::NonMinimal { .. })
        ));
        assert_eq!(classify(Finite(3), Finite(0), 0, "p").unwrap(), KodairaType::I0);
    }

    #[test]
    fn euler_numbers_and_names() {
        let all = [
            KodairaType::I(0),
            KodairaType::I(3),
            KodairaType::II,
            KodairaType::III,
            KodairaType::IV,
            KodairaType::IStar(1),
            KodairaType::IVStar,
            KodairaType::IIIStar,
            KodairaType::IIStar,
        ];
        let e: Vec<u32> = all.iter().map(KodairaType::euler_number).collect();
        assert_eq!(e, vec![0, 3, 2, 3, 4, 7, 8, 9, 10]);
        for t in all {
            assert_eq!(t.to_string().parse::<KodairaType>().unwrap(), t);
        }
    }
}
