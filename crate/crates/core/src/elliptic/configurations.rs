//! Combinatorics of singular-fibre orbits under an order-66 automorphism
//! preserving an elliptic fibration with a fixed section.

use std::fmt;

use super::kodaira::KodairaType;
use crate::cyclotomic::lcm;

/// An orbit of `length` singular fibres of one type under `g | P^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FibreOrbit {
    pub kind: KodairaType,
    pub length: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FibreConfiguration {
    pub orbits: Vec<FibreOrbit>,
}

impl FibreConfiguration {
    pub fn euler(&self) -> u64 {
        self.orbits
            .iter()
            .map(|o| o.length * o.kind.euler_number() as u64)
            .sum()
    }

    pub fn fixed_fibres(&self) -> u64 {
        self.orbits.iter().filter(|o| o.length == 1).count() as u64
    }

    /// Fibres mapped to themselves by `g^k`, i.e. lying in orbits of length dividing `k`.
    pub fn fibres_preserved_by(&self, k: u64) -> u64 {
        self.orbits
            .iter()
            .filter(|o| k.is_multiple_of(o.length))
            .map(|o| o.length)
            .sum()
    }

    pub fn base_order(&self) -> u64 {
        self.orbits.iter().map(|o| o.length).fold(1, lcm)
    }
}

impl fmt::Display for FibreConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.orbits.iter().map(|o| format!("{}x{}", o.kind, o.length)).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Numerical data constraining the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConfigurationRules {
    /// Order of the automorphism.
    pub order: u64,
    /// Power acting trivially on the base (here 33).
    pub base_kernel: u64,
    /// Largest order of a point-fixing automorphism of an elliptic curve.
    pub ec_bound: u64,
    /// Fixed points of an order-11 automorphism of `P^1`.
    pub base_fixed_points: u64,
    /// `e(Fix g^11)`.
    pub fixed_euler: i64,
    /// Euler number of the fixed section.
    pub section_euler: i64,
    /// The power whose fixed locus is bounded (here 11).
    pub bounded_power: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// All orbits have length dividing `k`; `g^k` acts fibrewise with order `ord/k`
    /// fixing the section, exceeding the curve bound.
    NoLongOrbit {
        fibrewise_order: u64,
    },
    /// A long orbit coexists with a base action of larger order, so a tame
    /// power of order 3 on `P^1` would fix more than 2 points.
    BaseOrderConflict,
    TooManyFixedFibres,
    /// `g^11` fixes the section and each preserved singular point.
    FixedLocusTooLarge {
        lower_bound: i64,
    },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NoLongOrbit { fibrewise_order } => {
                write!(f, "fibrewise automorphism of order {fibrewise_order} fixing a point")
            }
            Rejection::BaseOrderConflict => write!(f, "order-3 base map with more than 2 fixed points"),
            Rejection::TooManyFixedFibres => write!(f, "too many fixed fibres"),
            Rejection::FixedLocusTooLarge { lower_bound } => write!(f, "e(Fix) >= {lower_bound}"),
        }
    }
}

pub const FIBRE_TYPES: [KodairaType; 2] = [KodairaType::I(1), KodairaType::II];

/// Multisets of orbits with lengths dividing `base_kernel` and total Euler number 24.
pub fn enumerate_fibre_configurations(kinds: &[KodairaType], base_kernel: u64, total: u64) -> Vec<FibreConfiguration> {
    let lengths = crate::cyclotomic::divisors(base_kernel);
    let mut slots: Vec<FibreOrbit> = Vec::new();
    for &kind in kinds {
        for &length in &lengths {
            slots.push(FibreOrbit { kind, length });
        }
    }
    slots.sort();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(&slots, total, &mut current, &mut out);
    out.sort();
    out
}

fn fill(slots: &[FibreOrbit], remaining: u64, current: &mut Vec<FibreOrbit>, out: &mut Vec<FibreConfiguration>) {
    if remaining == 0 {
        out.push(FibreConfiguration {
            orbits: current.clone(),
        });
        return;
    }
    let Some((&slot, rest)) = slots.split_first() else {
        return;
    };
    let e = slot.length * slot.kind.euler_number() as u64;
    let mut used = 0;
    while used * e <= remaining {
        fill(rest, remaining - used * e, current, out);
        current.push(slot);
        used += 1;
    }
    current.truncate(current.len() - used as usize);
}

pub fn check_configuration(c: &FibreConfiguration, rules: &ConfigurationRules) -> Option<Rejection> {
    let long = rules.bounded_power;
    let short = rules.base_kernel / long;
    if c.orbits.iter().all(|o| short.is_multiple_of(o.length)) {
        let fibrewise_order = rules.order / short;
        if fibrewise_order > rules.ec_bound {
            return Some(Rejection::NoLongOrbit { fibrewise_order });
        }
    }
    if c.orbits.iter().any(|o| o.length == long) && c.base_order() != long {
        return Some(Rejection::BaseOrderConflict);
    }
    if c.fixed_fibres() > rules.base_fixed_points {
        return Some(Rejection::TooManyFixedFibres);
    }
    let lower_bound = rules.section_euler + c.fibres_preserved_by(long) as i64;
    if lower_bound > rules.fixed_euler {
        return Some(Rejection::FixedLocusTooLarge { lower_bound });
    }
    None
}

/// Every candidate configuration with its rejection reason, if any.
pub fn classify_configurations(rules: &ConfigurationRules) -> Vec<(FibreConfiguration, Option<Rejection>)> {
    enumerate_fibre_configurations(&FIBRE_TYPES, rules.base_kernel, 24)
        .into_iter()
        .map(|c| {
            let r = check_configuration(&c, rules);
            (c, r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(fixed: u64) -> ConfigurationRules {
        ConfigurationRules {
            order: 66,
            base_kernel: 33,
            ec_bound: 6,
            base_fixed_points: fixed,
            fixed_euler: 14,
            section_euler: 2,
            bounded_power: 11,
        }
    }

    #[test]
    fn unique_survivor() {
        for fixed in [2, 1] {
            let all = classify_configurations(&rules(fixed));
            let alive: Vec<String> = all
                .iter()
                .filter(|(_, r)| r.is_none())
                .map(|(c, _)| c.to_string())
                .collect();
            assert_eq!(alive, vec!["{IIx1, IIx11}"]);
        }
    }

    #[test]
    fn enumeration_is_complete() {
        let all = enumerate_fibre_configurations(&FIBRE_TYPES, 33, 24);
        assert!(all.iter().all(|c| c.euler() == 24));
        assert!(all.contains(&FibreConfiguration {
            orbits: vec![
                FibreOrbit {
                    kind: KodairaType::I(1),
                    length: 1
                };
                24
            ]
        }));
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn short_orbits_fail_curve_bound() {
        let c = FibreConfiguration {
            orbits: vec![
                FibreOrbit {
                    kind: KodairaType::II,
                    length: 3
                };
                4
            ],
        };
        assert_eq!(
            check_configuration(&c, &rules(2)),
            Some(Rejection::NoLongOrbit { fibrewise_order: 22 })
        );
    }
}
