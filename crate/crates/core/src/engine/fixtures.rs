//! Inputs of each case run and the documented negative controls.

use std::fmt;
use std::str::FromStr;

use crate::elliptic::fixture::{Coefficient, ModelFixture};
use crate::error::{Error, Result};

/// Everything a case run reads besides the fact table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseFixture {
    /// Profile carried into the fibration phase.
    pub profile: String,
    pub model: ModelFixture,
    /// Modulus of the weight congruences.
    pub modulus: u64,
    pub unknowns: Vec<String>,
    /// Relations imposed by `g^11` acting as complex multiplication.
    pub cm_relations: String,
    /// Normalization of the multiplier on the 2-form.
    pub normalization: String,
}

impl CaseFixture {
    pub fn tame() -> Self {
        CaseFixture {
            profile: "[1.2, z66:20]".into(),
            model: ModelFixture::builtin("x66").expect("builtin"),
            modulus: 66,
            unknowns: vec!["a".into(), "b".into(), "c".into()],
            cm_relations: "11a = 22; 11b = 33".into(),
            normalization: "a + c - b = 5".into(),
        }
    }

    pub fn wild() -> Self {
        CaseFixture {
            profile: "[1.2, z66:20]".into(),
            model: ModelFixture::builtin("y66").expect("builtin"),
            modulus: 6,
            unknowns: vec!["a".into(), "b".into()],
            cm_relations: "11a = 4; 11b = 3".into(),
            normalization: "a - b = -1".into(),
        }
    }

    pub fn perturbed(mut self, p: Perturbation) -> Self {
        p.apply(&mut self);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Perturbation {
    /// One extra trivial eigenvalue in the carried profile.
    ProfileMultiplicity,
    /// The `t0^11 t1` coefficient of `B` doubled.
    BCoefficient,
    /// The constant of the normalization shifted by 2.
    CongruenceConstant,
}

pub const PERTURBATIONS: [Perturbation; 3] = [
    Perturbation::ProfileMultiplicity,
    Perturbation::BCoefficient,
    Perturbation::CongruenceConstant,
];

impl Perturbation {
    pub fn apply(&self, f: &mut CaseFixture) {
        match self {
            Perturbation::ProfileMultiplicity => f.profile = f.profile.replacen("1.2", "1.3", 1),
            Perturbation::BCoefficient => {
                if let Some(Coefficient::Int(c)) = f.model.b.get_mut(1) {
                    *c *= 2;
                }
            }
            Perturbation::CongruenceConstant => {
                if let Some((lhs, rhs)) = f.normalization.rsplit_once('=') {
                    let k: i64 = rhs.trim().parse().unwrap_or(0);
                    f.normalization = format!("{lhs}= {}", k + 2);
                }
            }
        }
    }

    /// Id of the step expected to fail.
    pub fn predicted_step(&self) -> &'static str {
        match self {
            Perturbation::ProfileMultiplicity => "survivor.profile",
            Perturbation::BCoefficient => "model.discriminant-shape",
            Perturbation::CongruenceConstant => "weights.normalize",
        }
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Perturbation::ProfileMultiplicity => "profile-multiplicity",
            Perturbation::BCoefficient => "b-coefficient",
            Perturbation::CongruenceConstant => "congruence-constant",
        })
    }
}

impl FromStr for Perturbation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PERTURBATIONS
            .into_iter()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown perturbation `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbations_change_fixtures() {
        for base in [CaseFixture::tame(), CaseFixture::wild()] {
            for p in PERTURBATIONS {
                assert_ne!(base.clone().perturbed(p), base);
                assert_eq!(p.to_string().parse::<Perturbation>().unwrap(), p);
            }
        }
        assert_eq!(
            CaseFixture::tame()
                .perturbed(Perturbation::CongruenceConstant)
                .normalization,
            "a + c - b = 7"
        );
        assert_eq!(
            CaseFixture::wild()
                .perturbed(Perturbation::CongruenceConstant)
                .normalization,
            "a - b = 1"
        );
    }
}
