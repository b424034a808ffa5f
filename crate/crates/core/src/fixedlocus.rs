//! Fixed loci of automorphisms of K3 surfaces and the inequalities used to
//! rule configurations out.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arithmetic::field::is_prime;
use crate::cyclotomic::{gcd, lcm};
use crate::eigenprofile::EigenProfile;
use crate::error::{Error, Result};

/// A smooth curve on a K3 surface; `C^2 = 2g - 2` by adjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveComponent {
    pub genus: u64,
}

impl CurveComponent {
    pub fn new(genus: u64) -> Self {
        CurveComponent { genus }
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64
    }

    pub fn self_intersection(&self) -> i64 {
        -self.euler()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FixedLocus {
    pub isolated_points: u64,
    pub curves: Vec<CurveComponent>,
}

impl FixedLocus {
    pub fn new(isolated_points: u64, genera: impl IntoIterator<Item = u64>) -> Self {
        let mut curves: Vec<CurveComponent> = genera.into_iter().map(CurveComponent::new).collect();
        curves.sort();
        FixedLocus {
            isolated_points,
            curves,
        }
    }

    pub fn points(n: u64) -> Self {
        Self::new(n, [])
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.isolated_points as i64 + self.curves.iter().map(CurveComponent::euler).sum::<i64>()
    }

    pub fn union(&self, other: &FixedLocus) -> FixedLocus {
        Self::new(
            self.isolated_points + other.isolated_points,
            self.curves.iter().chain(&other.curves).map(|c| c.genus),
        )
    }
}

impl fmt::Display for FixedLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.curves.iter().map(|c| c.genus.to_string()).collect();
        write!(f, "points={} genera=[{}]", self.isolated_points, g.join(","))
    }
}

impl FromStr for FixedLocus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("fixed locus `{s}`"));
        let (pts, gen) = s.trim().split_once(' ').ok_or_else(bad)?;
        let pts: u64 = pts
            .strip_prefix("points=")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let gen = gen
            .trim()
            .strip_prefix("genera=[")
            .and_then(|g| g.strip_suffix(']'))
            .ok_or_else(bad)?;
        let genera = gen
            .split(',')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .map(|g| g.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(FixedLocus::new(pts, genera))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LefschetzCheck {
    pub locus_euler: i64,
    pub lefschetz: i64,
}

impl LefschetzCheck {
    pub fn passes(&self) -> bool {
        self.locus_euler == self.lefschetz
    }
}

/// Compares `e(L)` with the Lefschetz number of a tame automorphism.
pub fn check_lefschetz_consistency(locus: &FixedLocus, profile: &EigenProfile) -> Result<LefschetzCheck> {
    Ok(LefschetzCheck {
        locus_euler: locus.euler_characteristic(),
        lefschetz: profile.lefschetz_number()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeBound {
    pub feasible: Vec<u64>,
    pub equality: Vec<u64>,
}

/// Values `k >= 0` for which a curve of genus `k + offset` can meet `fixed`
/// in at most `max_intersection` points: `C_{k+offset}^2 * fixed^2 <= max^2`.
pub fn hodge_index_genus_bound(fixed: &CurveComponent, max_intersection: u64, offset: u64) -> Result<HodgeBound> {
    let s = fixed.self_intersection();
    if s <= 0 {
        return Err(Error::Precondition(format!(
            "Hodge index bound needs positive self-intersection, got {s}"
        )));
    }
    if offset < 2 {
        return Err(Error::Precondition(
            "parametrized curve must have positive self-intersection".into(),
        ));
    }
    let bound = (max_intersection as i128).pow(2);
    let mut feasible = Vec::new();
    let mut equality = Vec::new();
    for k in 0u64.. {
        let lhs = CurveComponent::new(k + offset).self_intersection() as i128 * s as i128;
        if lhs > bound {
            break;
        }
        feasible.push(k);
        if lhs == bound {
            equality.push(k);
        }
    }
    Ok(HodgeBound { feasible, equality })
}

pub fn is_rational_square(q: &BigRational) -> bool {
    if q.is_negative() {
        return false;
    }
    if q.is_zero() {
        return true;
    }
    let square = |n: &BigInt| {
        let r = n.sqrt();
        &r * &r == *n
    };
    square(q.numer()) && square(q.denom())
}

fn require_prime_order(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("automorphism order {n} < 2")));
    }
    if !is_prime(n) {
        return Err(Error::Precondition(format!(
            "Riemann-Hurwitz count needs prime order, got {n}"
        )));
    }
    Ok(())
}

/// Largest number of fixed points of an order-`n` automorphism of a genus `g`
/// curve, from `2g - 2 = n(2g' - 2) + r(n - 1)`.
pub fn rh_max_fixed_points(n: u64, g: u64) -> Result<u64> {
    require_prime_order(n)?;
    let (n, lhs) = (n as i64, 2 * g as i64 - 2);
    let mut best = 0;
    for gq in 0i64.. {
        let num = lhs - n * (2 * gq - 2);
        if num < 0 {
            break;
        }
        if num % (n - 1) == 0 {
            best = best.max((num / (n - 1)) as u64);
        }
    }
    Ok(best)
}

/// Quotient genus for an order-`n` action with `r` fixed points, if admissible.
pub fn rh_quotient_genus(n: u64, g: u64, r: u64) -> Result<Option<u64>> {
    require_prime_order(n)?;
    let num = 2 * g as i64 - 2 - r as i64 * (n as i64 - 1);
    if num % n as i64 != 0 {
        return Ok(None);
    }
    let two_gq = num / n as i64 + 2;
    Ok((two_gq >= 0 && two_gq % 2 == 0).then_some(two_gq as u64 / 2))
}

/// A permutation of `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAction {
    perm: Vec<usize>,
}

impl FiniteAction {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= perm.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        Ok(FiniteAction { perm })
    }

    pub fn identity(n: usize) -> Self {
        FiniteAction { perm: (0..n).collect() }
    }

    /// Builds the permutation with the given disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (j, &i) in c.iter().enumerate() {
                if i >= n || std::mem::replace(&mut used[i], true) {
                    return Err(Error::InvalidArgument("cycles are not disjoint".into()));
                }
                perm[i] = c[(j + 1) % c.len()];
            }
        }
        FiniteAction::new(perm)
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn cycle_lengths(&self) -> Vec<u64> {
        let mut seen = vec![false; self.perm.len()];
        let mut out = Vec::new();
        for s in 0..self.perm.len() {
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1, lcm)
    }

    pub fn power(&self, k: u64) -> FiniteAction {
        let k = k % self.order();
        let perm = (0..self.perm.len())
            .map(|mut i| {
                for _ in 0..k {
                    i = self.perm[i];
                }
                i
            })
            .collect();
        FiniteAction { perm }
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        (0..self.perm.len()).filter(|&i| self.perm[i] == i).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixIdentities {
    /// `Fix(s) ⊆ Fix(s^a)`.
    pub contained: bool,
    /// `Fix(s^a) ∩ Fix(s^b) = Fix(s^gcd(a,b))`.
    pub intersection: bool,
    /// `Fix(s) = Fix(s^a)` when `gcd(a, ord s) = 1`; true otherwise.
    pub coprime: bool,
}

impl FixIdentities {
    pub fn all(&self) -> bool {
        self.contained && self.intersection && self.coprime
    }
}

pub fn fix_identities(sigma: &FiniteAction, a: u64, b: u64) -> FixIdentities {
    let fix = sigma.fixed_points();
    let fa = sigma.power(a).fixed_points();
    let fb = sigma.power(b).fixed_points();
    let fd = sigma.power(gcd(a, b)).fixed_points();
    FixIdentities {
        contained: fix.is_subset(&fa),
        intersection: fa.intersection(&fb).copied().collect::<BTreeSet<_>>() == fd,
        coprime: gcd(a, sigma.order()) != 1 || fix == fa,
    }
}
