//! Galois-closed eigenvalue profiles of automorphisms on 22-dimensional `H^2`.
//!
//! A profile is stored orbit-wise: primitive order `d` maps to the number of
//! full conjugate orbits `[zeta_d : phi(d)]` occurring among the eigenvalues.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::{divisors, euler_phi, gcd, lcm, primitive_root_sum, RootOfUnity};
use crate::error::{Error, Result};

/// `b_2` of a K3 surface.
pub const K3_H2_DIM: u64 = 22;
/// Contribution of `H^0` and `H^4` to the Lefschetz number.
const K3_EVEN_OUTER: i64 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenProfile {
    entries: BTreeMap<u64, u64>,
    total_dim: u64,
}

impl EigenProfile {
    /// Builds a profile, checking `sum phi(d) r_d == total_dim`.
    pub fn new(entries: impl IntoIterator<Item = (u64, u64)>, total_dim: u64) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (d, r) in entries {
            if d == 0 {
                return Err(Error::InvalidArgument("primitive order 0".into()));
            }
            if r > 0 {
                *map.entry(d).or_insert(0) += r;
            }
        }
        let dim: u64 = map.iter().map(|(&d, &r)| euler_phi(d) * r).sum();
        if dim != total_dim {
            return Err(Error::DimensionMismatch {
                expected: total_dim,
                actual: dim,
            });
        }
        Ok(EigenProfile {
            entries: map,
            total_dim,
        })
    }

    /// A profile on K3 `H^2`.
    pub fn k3(entries: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        Self::new(entries, K3_H2_DIM)
    }

    pub fn identity(dim: u64) -> Self {
        EigenProfile {
            entries: BTreeMap::from([(1, dim)]),
            total_dim: dim,
        }
    }

    pub fn total_dim(&self) -> u64 {
        self.total_dim
    }

    pub fn entries(&self) -> &BTreeMap<u64, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, d: u64) -> u64 {
        self.entries.get(&d).copied().unwrap_or(0)
    }

    /// The profile as sorted `(d, r)` pairs; this is the canonical sort key.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.entries.iter().map(|(&d, &r)| (d, r)).collect()
    }

    /// All eigenvalues with repetition, orbit by orbit.
    pub fn eigenvalues(&self) -> Vec<RootOfUnity> {
        let mut out = Vec::with_capacity(self.total_dim as usize);
        for (&d, &r) in &self.entries {
            let orbit = RootOfUnity::primitive(d).conjugate_orbit();
            for _ in 0..r {
                out.extend(orbit.iter().copied());
            }
        }
        out
    }

    pub fn power_profile(&self, k: u64) -> EigenProfile {
        let mut map = BTreeMap::new();
        for (&d, &r) in &self.entries {
            let d2 = d / gcd(d, k);
            *map.entry(d2).or_insert(0) += r * euler_phi(d) / euler_phi(d2);
        }
        EigenProfile {
            entries: map,
            total_dim: self.total_dim,
        }
    }

    pub fn trace(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&d, &r)| r as i64 * primitive_root_sum(d))
            .sum()
    }

    /// `e(Fix g) = 2 + Tr(g* | H^2)` for an automorphism of a K3 surface.
    pub fn lefschetz_number(&self) -> Result<i64> {
        if self.total_dim != K3_H2_DIM {
            return Err(Error::Precondition(format!(
                "Lefschetz number needs a {K3_H2_DIM}-dimensional profile, got {}",
                self.total_dim
            )));
        }
        Ok(K3_EVEN_OUTER + self.trace())
    }

    pub fn invariant_dimension(&self) -> u64 {
        self.multiplicity(1)
    }

    pub fn profile_order(&self) -> u64 {
        self.entries.keys().fold(1, |acc, &d| lcm(acc, d))
    }

    pub fn contains_orbit(&self, d: u64) -> bool {
        self.multiplicity(d) > 0
    }
}

fn orbit_label(d: u64) -> String {
    match d {
        1 => "1".into(),
        2 => "-1".into(),
        _ => format!("z{d}:{}", euler_phi(d)),
    }
}

impl fmt::Display for EigenProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .entries
            .iter()
            .map(|(&d, &r)| match r {
                1 => orbit_label(d),
                _ => format!("{}.{r}", orbit_label(d)),
            })
            .collect();
        write!(f, "[{}]", items.join(", "))
    }
}

fn parse_item(item: &str) -> Result<(u64, u64)> {
    let bad = || Error::Parse(format!("profile item `{item}`"));
    let (head, reps) = if let Some(rest) = item.strip_prefix('(') {
        let (inner, tail) = rest.split_once(')').ok_or_else(bad)?;
        let reps = match tail.strip_prefix('.') {
            Some(r) => r.parse().map_err(|_| bad())?,
            None if tail.is_empty() => 1,
            None => return Err(bad()),
        };
        (inner, reps)
    } else if let Some(body) = item.strip_prefix('z') {
        match body.split_once('.') {
            Some((h, r)) => (&item[..h.len() + 1], r.parse().map_err(|_| bad())?),
            None => (item, 1),
        }
    } else {
        match item.split_once('.') {
            Some((h, r)) => (h, r.parse().map_err(|_| bad())?),
            None => (item, 1),
        }
    };
    let d = match head {
        "1" => 1,
        "-1" => 2,
        _ => {
            let body = head.strip_prefix('z').ok_or_else(bad)?;
            let (d, phi) = body.split_once(':').ok_or_else(bad)?;
            let d: u64 = d.parse().map_err(|_| bad())?;
            let phi: u64 = phi.parse().map_err(|_| bad())?;
            if d == 0 || euler_phi(d) != phi {
                return Err(Error::Parse(format!("orbit `{head}` has the wrong size")));
            }
            d
        }
    };
    Ok((d, reps))
}

impl FromStr for EigenProfile {
    type Err = Error;

    /// Accepts `[1, z66:20, 1]` as well as merged forms such as `[1.2, z6:2.10]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("profile `{s}` must be bracketed")))?;
        let mut entries = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            entries.push(parse_item(item)?);
        }
        let dim = entries.iter().map(|&(d, r)| euler_phi(d) * r).sum();
        EigenProfile::new(entries, dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProfileConstraint {
    RequiresEigenvalueOne,
    ContainsFullOrbit(u64),
    ExactProfileOrder(u64),
    PrescribedPowerProfile(u64, EigenProfile),
}

impl ProfileConstraint {
    pub fn holds(&self, p: &EigenProfile) -> bool {
        match self {
            ProfileConstraint::RequiresEigenvalueOne => p.contains_orbit(1),
            ProfileConstraint::ContainsFullOrbit(d) => p.contains_orbit(*d),
            ProfileConstraint::ExactProfileOrder(n) => p.profile_order() == *n,
            ProfileConstraint::PrescribedPowerProfile(k, q) => p.power_profile(*k) == *q,
        }
    }
}

impl fmt::Display for ProfileConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileConstraint::RequiresEigenvalueOne => write!(f, "one"),
            ProfileConstraint::ContainsFullOrbit(d) => write!(f, "orbit:{d}"),
            ProfileConstraint::ExactProfileOrder(n) => write!(f, "order:{n}"),
            ProfileConstraint::PrescribedPowerProfile(k, q) => write!(f, "power:{k}={q}"),
        }
    }
}

impl FromStr for ProfileConstraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("constraint `{s}`"));
        if s == "one" {
            return Ok(ProfileConstraint::RequiresEigenvalueOne);
        }
        let (tag, arg) = s.split_once(':').ok_or_else(bad)?;
        match tag {
            "orbit" => Ok(ProfileConstraint::ContainsFullOrbit(arg.parse().map_err(|_| bad())?)),
            "order" => Ok(ProfileConstraint::ExactProfileOrder(arg.parse().map_err(|_| bad())?)),
            "power" => {
                let (k, q) = arg.split_once('=').ok_or_else(bad)?;
                Ok(ProfileConstraint::PrescribedPowerProfile(
                    k.parse().map_err(|_| bad())?,
                    q.parse()?,
                ))
            }
            _ => Err(bad()),
        }
    }
}

/// All orbit multisets over the divisors of `n` filling dimension `dim`.
pub fn profiles_of_order_dividing(n: u64, dim: u64) -> Vec<EigenProfile> {
    let ds: Vec<(u64, u64)> = divisors(n).into_iter().map(|d| (d, euler_phi(d))).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(&ds, dim, &mut current, &mut out, dim);
    out
}

fn fill(ds: &[(u64, u64)], remaining: u64, current: &mut Vec<(u64, u64)>, out: &mut Vec<EigenProfile>, dim: u64) {
    let Some((&(d, phi), rest)) = ds.split_first() else {
        if remaining == 0 {
            out.push(EigenProfile::new(current.iter().copied(), dim).expect("dimension filled"));
        }
        return;
    };
    for r in 0..=remaining / phi {
        current.push((d, r));
        fill(rest, remaining - r * phi, current, out, dim);
        current.pop();
    }
}

/// Enumerates profiles of dimension `dim` satisfying every constraint.
///
/// The eigenvalues are drawn from the `n`-th roots of unity where `n` is the
/// declared exact order, so an `ExactProfileOrder` constraint is required.
/// Output is sorted lexicographically on the `(d, r)` pairs.
pub fn enumerate_profiles(dim: u64, constraints: &[ProfileConstraint]) -> Result<Vec<EigenProfile>> {
    let n = constraints
        .iter()
        .find_map(|c| match c {
            ProfileConstraint::ExactProfileOrder(n) => Some(*n),
            _ => None,
        })
        .ok_or_else(|| Error::Precondition("profile enumeration needs an exact order constraint".into()))?;
    if n == 0 {
        return Err(Error::InvalidArgument("order 0".into()));
    }
    let mut out: Vec<EigenProfile> = profiles_of_order_dividing(n, dim)
        .into_iter()
        .filter(|p| constraints.iter().all(|c| c.holds(p)))
        .collect();
    out.sort_by_key(|p| p.pairs());
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> EigenProfile {
        s.parse().unwrap()
    }

    #[test]
    fn lefschetz_numbers_of_powers() {
        let g = p("[1, z66:20, 1]");
        assert_eq!(g.lefschetz_number().unwrap(), 3);
        assert_eq!(g.power_profile(11).lefschetz_number().unwrap(), 14);
        let h = p("[1, z66:20, -1]");
        assert_eq!(h.power_profile(33).lefschetz_number().unwrap(), -18);
        assert_eq!(h.power_profile(11).lefschetz_number().unwrap(), 12);
        assert_eq!(h.power_profile(22).lefschetz_number().unwrap(), -6);
    }

    #[test]
    fn power_examples() {
        let g = EigenProfile::k3([(1, 2), (66, 1)]).unwrap();
        assert_eq!(g.power_profile(33), EigenProfile::k3([(1, 2), (2, 20)]).unwrap());
        assert_eq!(g.power_profile(11), EigenProfile::k3([(1, 2), (6, 10)]).unwrap());
        assert_eq!(g.power_profile(0), EigenProfile::identity(22));
    }

    #[test]
    fn trace_and_order() {
        assert_eq!(EigenProfile::k3([(1, 2), (66, 1)]).unwrap().trace(), 1);
        assert_eq!(EigenProfile::identity(22).trace(), 22);
        assert_eq!(EigenProfile::k3([(1, 1), (2, 21)]).unwrap().trace(), -20);
        assert_eq!(EigenProfile::k3([(1, 1), (2, 1), (33, 1)]).unwrap().profile_order(), 66);
        assert_eq!(EigenProfile::identity(22).profile_order(), 1);
    }

    #[test]
    fn invariant_dimensions() {
        assert_eq!(p("[1, z66:20, 1]").invariant_dimension(), 2);
        assert_eq!(p("[1, z66:20, -1]").invariant_dimension(), 1);
        assert_eq!(EigenProfile::identity(22).invariant_dimension(), 22);
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("[1, z66:20, 1]").to_string(), "[1.2, z66:20]");
        assert_eq!(p("[1, -1.20, 1]").to_string(), "[1.2, -1.20]");
        assert_eq!(p("[1, (z6:2).10, 1]").to_string(), "[1.2, z6:2.10]");
        assert_eq!(p("[1.2, z6:2.10]"), p("[1, (z6:2).10, 1]"));
        assert!("[1, z66:19]".parse::<EigenProfile>().is_err());
        assert!("1, 1".parse::<EigenProfile>().is_err());
    }

    #[test]
    fn rejects_wrong_dimension() {
        assert!(EigenProfile::k3([(1, 2), (66, 2)]).is_err());
    }

    #[test]
    fn tame_enumeration() {
        use ProfileConstraint::*;
        let out = enumerate_profiles(
            22,
            &[ExactProfileOrder(66), ContainsFullOrbit(66), RequiresEigenvalueOne],
        )
        .unwrap();
        let shown: Vec<String> = out.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["[1, -1, z66:20]", "[1.2, z66:20]"]);
    }

    #[test]
    fn mathieu_enumeration() {
        use ProfileConstraint::*;
        let out = enumerate_profiles(
            22,
            &[
                ExactProfileOrder(66),
                RequiresEigenvalueOne,
                PrescribedPowerProfile(6, p("[1, (z11:10).2, 1]")),
            ],
        )
        .unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.contains(&p("[1, z33:20, -1]")));
        assert!(out.contains(&p("[1, z66:20, -1]")));
        assert!(out.contains(&p("[1, z66:20, 1]")));
    }

    #[test]
    fn trivial_enumeration() {
        let out = enumerate_profiles(22, &[ProfileConstraint::ExactProfileOrder(1)]).unwrap();
        assert_eq!(out, vec![EigenProfile::identity(22)]);
        assert!(enumerate_profiles(22, &[ProfileConstraint::RequiresEigenvalueOne]).is_err());
    }

    #[test]
    fn constraint_text() {
        for s in ["one", "orbit:66", "order:66", "power:6=[1.2, z11:10.2]"] {
            assert_eq!(s.parse::<ProfileConstraint>().unwrap().to_string(), s);
        }
    }
}
