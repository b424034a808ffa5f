//! Orbits of a cyclic action on the base `P^1` on a set of places.

use std::fmt;
use std::str::FromStr;

use super::form::Place;
use crate::error::{Error, Result};
use crate::poly::factor::Factorize;
use crate::poly::{Poly, PolyRing};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseAction {
    /// `t -> zeta_m t`; fixes `t = 0` and `t = infinity`.
    Multiplicative { order: u64 },
    /// `t -> t + 1` in characteristic `p`; fixes only `t = infinity`.
    Translation,
}

impl BaseAction {
    pub fn identity() -> Self {
        BaseAction::Multiplicative { order: 1 }
    }

    /// Length of every non-fixed geometric orbit.
    pub fn orbit_length(&self, characteristic: u64) -> u64 {
        match self {
            BaseAction::Multiplicative { order } => *order,
            BaseAction::Translation => characteristic,
        }
    }

    pub fn fixed_places<E: Clone + PartialEq + fmt::Debug, R: Ring<Elem = E>>(&self, field: &R) -> Vec<Place<E>> {
        match self {
            BaseAction::Multiplicative { .. } => {
                vec![Place::Finite(PolyRing::new(field.clone()).x()), Place::Infinity]
            }
            BaseAction::Translation => vec![Place::Infinity],
        }
    }

    fn validate(&self, characteristic: u64) -> Result<()> {
        match self {
            BaseAction::Multiplicative { order: 0 } => Err(Error::InvalidArgument("order 0".into())),
            BaseAction::Multiplicative { order } if characteristic != 0 && order % characteristic == 0 => {
                Err(Error::InvalidArgument(format!(
                    "scaling of order {order} does not exist in characteristic {characteristic}"
                )))
            }
            BaseAction::Translation if characteristic == 0 => Err(Error::InvalidArgument(
                "translation has finite order only in positive characteristic".into(),
            )),
            _ => Ok(()),
        }
    }

    /// Generator of the invariant subring: `t^m` or `t^p - t`.
    fn invariant<R: Ring>(&self, pr: &PolyRing<R>) -> Poly<R::Elem> {
        let one = pr.base().one();
        match self {
            BaseAction::Multiplicative { order } => pr.monomial(one, *order as usize),
            BaseAction::Translation => {
                let p = pr.base().characteristic() as usize;
                pr.sub(&pr.monomial(one, p), &pr.x())
            }
        }
    }
}

impl fmt::Display for BaseAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseAction::Multiplicative { order } => write!(f, "mult:{order}"),
            BaseAction::Translation => write!(f, "translate"),
        }
    }
}

impl FromStr for BaseAction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "translate" {
            return Ok(BaseAction::Translation);
        }
        s.strip_prefix("mult:")
            .and_then(|m| m.parse().ok())
            .map(|order| BaseAction::Multiplicative { order })
            .ok_or_else(|| Error::Parse(format!("base action `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPlace<E> {
    pub place: Place<E>,
    /// Whether the place belongs to the given set (e.g. carries a singular fibre).
    pub in_set: bool,
}

/// Places lying over one irreducible factor `q(u)` of the invariant polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitGroup<E> {
    pub invariant_factor: Poly<E>,
    pub orbit_length: u64,
    pub geometric_orbits: usize,
    pub packets: Vec<Place<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition<E> {
    pub fixed: Vec<FixedPlace<E>>,
    pub groups: Vec<OrbitGroup<E>>,
}

impl<E> OrbitDecomposition<E> {
    /// Lengths of all geometric orbits inside the place set, fixed ones first.
    pub fn orbit_lengths(&self) -> Vec<u64> {
        let fixed = self.fixed.iter().filter(|f| f.in_set).map(|_| 1);
        let moving = self
            .groups
            .iter()
            .flat_map(|g| std::iter::repeat_n(g.orbit_length, g.geometric_orbits));
        fixed.chain(moving).collect()
    }

    pub fn geometric_points(&self) -> u64 {
        self.orbit_lengths().iter().sum()
    }

    pub fn fixed_in_set(&self) -> usize {
        self.fixed.iter().filter(|f| f.in_set).count()
    }
}

/// Splits a set of distinct places into fixed places and orbits.
///
/// The moving places multiply to `P(t)`; the set is invariant iff
/// `P = Q(g(t))` for the invariant `g`, and each irreducible factor of `Q`
/// of degree `e` accounts for `e` geometric orbits.
pub fn base_orbits<F: Factorize>(
    field: &F,
    action: &BaseAction,
    places: &[Place<F::Elem>],
) -> Result<OrbitDecomposition<F::Elem>> {
    let pr = PolyRing::new(field.clone());
    let p = field.characteristic();
    action.validate(p)?;
    for (i, a) in places.iter().enumerate() {
        if places[..i].contains(a) {
            return Err(Error::InvalidArgument(format!(
                "place {} listed twice",
                a.format(field)
            )));
        }
    }
    let fixed_set = action.fixed_places(field);
    let fixed = fixed_set
        .iter()
        .map(|f| FixedPlace {
            place: f.clone(),
            in_set: places.contains(f),
        })
        .collect();
    let moving: Vec<&Poly<F::Elem>> = places
        .iter()
        .filter(|pl| !fixed_set.contains(pl))
        .map(|pl| match pl {
            Place::Finite(q) => q,
            Place::Infinity => unreachable!("infinity is always fixed"),
        })
        .collect();
    let mut groups = Vec::new();
    if !moving.is_empty() {
        let prod = moving.iter().fold(pr.one(), |acc, q| pr.mul(&acc, q));
        let g = action.invariant(&pr);
        let digits = pr.expand_in_base(&prod, &g);
        if digits.iter().any(|d| d.degree().unwrap_or(0) > 0) {
            return Err(Error::NonInvariantPlaces(format!(
                "{} is not a polynomial in {}",
                pr.format(&prod, "t"),
                pr.format(&g, "t")
            )));
        }
        let q = pr.from_coeffs(
            digits
                .iter()
                .map(|d| d.coeff(0).cloned().unwrap_or_else(|| field.zero()))
                .collect(),
        );
        let length = action.orbit_length(p);
        for (qi, mult) in field.factor(&q) {
            debug_assert_eq!(mult, 1);
            let lifted = qi
                .coeffs()
                .iter()
                .rev()
                .fold(pr.zero(), |acc, c| pr.add(&pr.mul(&acc, &g), &pr.constant(c.clone())));
            let packets: Vec<Place<F::Elem>> = moving
                .iter()
                .filter(|pi| pr.divides(pi, &lifted))
                .map(|pi| Place::Finite((*pi).clone()))
                .collect();
            let e = qi.degree().unwrap();
            let covered: usize = packets.iter().map(Place::residue_degree).sum();
            if covered as u64 != e as u64 * length {
                return Err(Error::InconsistentAction(format!(
                    "places over {} cover {covered} points, expected {}",
                    pr.format(&qi, "u"),
                    e as u64 * length
                )));
            }
            groups.push(OrbitGroup {
                invariant_factor: qi,
                orbit_length: length,
                geometric_orbits: e,
                packets,
            });
        }
    }
    Ok(OrbitDecomposition { fixed, groups })
}

/// Outcome of the argument that `A` must vanish identically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcedVanishing {
    /// Type II at every cusp gives `v(A) >= 1` at more places than `deg A`.
    pub by_count: bool,
    /// Non-fixed orbits are longer than `deg A`, so zeros of `A` sit at
    /// fixed places only, and there are more cusps than fixed places.
    pub by_orbits: bool,
}

impl ForcedVanishing {
    pub fn forced(&self) -> bool {
        self.by_count || self.by_orbits
    }
}

pub fn force_a_zero(deg_a: u64, cusp_places: u64, action: &BaseAction, characteristic: u64) -> ForcedVanishing {
    let fixed = match action {
        BaseAction::Multiplicative { .. } => 2,
        BaseAction::Translation => 1,
    };
    ForcedVanishing {
        by_count: cusp_places > deg_a,
        by_orbits: action.orbit_length(characteristic) > deg_a && cusp_places > fixed,
    }
}
