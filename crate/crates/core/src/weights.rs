//! Linear congruence systems for the weights of diagonal actions.

use std::fmt;

use crate::cyclotomic::RootOfUnity;
use crate::error::{Error, Result};

/// Largest number of unknowns accepted by the brute-force solver.
pub const MAX_UNKNOWNS: usize = 4;

/// `sum coeffs[i] * w_i = constant (mod n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub coeffs: Vec<u64>,
    pub constant: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSystem {
    modulus: u64,
    unknowns: Vec<String>,
    relations: Vec<Relation>,
}

impl CongruenceSystem {
    pub fn new(modulus: u64, unknowns: &[&str]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        Ok(CongruenceSystem {
            modulus,
            unknowns: unknowns.iter().map(|s| s.to_string()).collect(),
            relations: Vec::new(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    fn reduce(&self, c: i64) -> u64 {
        c.rem_euclid(self.modulus as i64) as u64
    }

    pub fn add_relation(&mut self, coeffs: &[i64], constant: i64) -> Result<()> {
        if coeffs.len() != self.unknowns.len() {
            return Err(Error::InvalidArgument(format!(
                "relation has {} coefficients for {} unknowns",
                coeffs.len(),
                self.unknowns.len()
            )));
        }
        let rel = Relation {
            coeffs: coeffs.iter().map(|&c| self.reduce(c)).collect(),
            constant: self.reduce(constant),
        };
        self.relations.push(rel);
        Ok(())
    }

    pub fn with(mut self, relations: &str) -> Result<Self> {
        self.parse_relations(relations)?;
        Ok(self)
    }

    /// Parses `11a = 22`, `a + c - b = 5` or a chain `3a = 2b = 12c = c`,
    /// several separated by `;`. `≡` may be used for `=`.
    pub fn parse_relations(&mut self, text: &str) -> Result<()> {
        for rel in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let rel = rel.replace('≡', "=");
            let sides: Vec<&str> = rel.split('=').collect();
            if sides.len() < 2 {
                return Err(Error::Parse(format!("relation `{rel}` has no `=`")));
            }
            let parsed = sides.iter().map(|s| self.parse_linear(s)).collect::<Result<Vec<_>>>()?;
            for pair in parsed.windows(2) {
                let (l, lc) = &pair[0];
                let (r, rc) = &pair[1];
                let coeffs: Vec<i64> = l.iter().zip(r).map(|(a, b)| a - b).collect();
                self.add_relation(&coeffs, rc - lc)?;
            }
        }
        Ok(())
    }

    fn parse_linear(&self, s: &str) -> Result<(Vec<i64>, i64)> {
        let bad = || Error::Parse(format!("linear expression `{}`", s.trim()));
        let mut coeffs = vec![0i64; self.unknowns.len()];
        let mut constant = 0i64;
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let split = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
            let (num, var) = body.split_at(split);
            let var = var.strip_prefix('*').unwrap_or(var);
            let k: i64 = if num.is_empty() {
                1
            } else {
                num.parse().map_err(|_| bad())?
            };
            if var.is_empty() {
                if num.is_empty() {
                    return Err(bad());
                }
                constant += sign * k;
            } else {
                let idx = self
                    .unknowns
                    .iter()
                    .position(|u| u == var)
                    .ok_or_else(|| Error::Parse(format!("unknown `{var}`")))?;
                coeffs[idx] += sign * k;
            }
        }
        Ok((coeffs, constant))
    }

    pub fn satisfies(&self, values: &[u64]) -> bool {
        self.relations.iter().all(|r| self.holds(r, values))
    }

    fn holds(&self, r: &Relation, values: &[u64]) -> bool {
        let n = self.modulus as u128;
        let s: u128 = r
            .coeffs
            .iter()
            .zip(values)
            .map(|(&c, &v)| c as u128 * v as u128 % n)
            .sum();
        s % n == r.constant as u128
    }

    pub fn format_relation(&self, r: &Relation) -> String {
        let n = self.modulus as i64;
        let mut out = String::new();
        for (name, &c) in self.unknowns.iter().zip(&r.coeffs) {
            let c = c as i64;
            let c = if c > n / 2 { c - n } else { c };
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            let term = if mag == 1 { name.clone() } else { format!("{mag}{name}") };
            match (out.is_empty(), c < 0) {
                (true, false) => out.push_str(&term),
                (true, true) => out.push_str(&format!("-{term}")),
                (false, false) => out.push_str(&format!(" + {term}")),
                (false, true) => out.push_str(&format!(" - {term}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} = {}", r.constant)
    }
}

impl fmt::Display for CongruenceSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| self.format_relation(r)).collect();
        write!(f, "{} (mod {})", rels.join("; "), self.modulus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightSolution {
    pub values: Vec<u64>,
}

impl fmt::Display for WeightSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "({})", v.join(", "))
    }
}

/// Pairwise equality of consecutive monomial weights.
pub fn weights_from_invariance(monomials: &[Vec<u32>], unknowns: &[&str], modulus: u64) -> Result<CongruenceSystem> {
    let mut sys = CongruenceSystem::new(modulus, unknowns)?;
    if monomials.is_empty() {
        return Err(Error::InvalidArgument("no monomials".into()));
    }
    for pair in monomials.windows(2) {
        let coeffs: Vec<i64> = pair[0]
            .iter()
            .zip(&pair[1])
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        sys.add_relation(&coeffs, 0)?;
    }
    Ok(sys)
}

/// All solutions in `(Z/n)^k`, ascending lexicographically.
pub fn solve(sys: &CongruenceSystem) -> Result<Vec<WeightSolution>> {
    let k = sys.unknowns.len();
    if k > MAX_UNKNOWNS {
        return Err(Error::Precondition(format!(
            "brute force supports at most {MAX_UNKNOWNS} unknowns, got {k}"
        )));
    }
    // Relations grouped by the last unknown they involve, checked as soon as
    // that unknown is assigned.
    let mut by_last: Vec<Vec<&Relation>> = vec![Vec::new(); k.max(1)];
    for r in &sys.relations {
        match r.coeffs.iter().rposition(|&c| c != 0) {
            Some(i) => by_last[i].push(r),
            None if r.constant != 0 => return Ok(Vec::new()),
            None => {}
        }
    }
    let mut out = Vec::new();
    let mut values = vec![0u64; k];
    search(sys, &by_last, 0, &mut values, &mut out);
    Ok(out)
}

fn search(
    sys: &CongruenceSystem,
    by_last: &[Vec<&Relation>],
    i: usize,
    values: &mut [u64],
    out: &mut Vec<WeightSolution>,
) {
    if i == values.len() {
        out.push(WeightSolution {
            values: values.to_vec(),
        });
        return;
    }
    for v in 0..sys.modulus {
        values[i] = v;
        if by_last[i].iter().all(|r| sys.holds(r, values)) {
            search(sys, by_last, i + 1, values, out);
        }
    }
}

/// `ord(g) = m.n` where `n` is the order of the character on the 2-form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderDecomposition {
    pub m: u64,
    pub n: u64,
}

impl OrderDecomposition {
    pub fn is_purely_non_symplectic(&self) -> bool {
        self.m == 1
    }
}

impl fmt::Display for OrderDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.m, self.n)
    }
}

pub fn order_decomposition(full_order: u64, omega_multiplier: &RootOfUnity) -> Result<OrderDecomposition> {
    let n = omega_multiplier.order();
    if full_order == 0 || !full_order.is_multiple_of(n) {
        return Err(Error::InconsistentAction(format!(
            "multiplier {omega_multiplier} has order {n}, which does not divide {full_order}"
        )));
    }
    Ok(OrderDecomposition { m: full_order / n, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tame_system() -> CongruenceSystem {
        CongruenceSystem::new(66, &["a", "b", "c"])
            .unwrap()
            .with("3a = 2b = 12c = c; 11a = 22; 11b = 33")
            .unwrap()
    }

    #[test]
    fn family_and_normalization() {
        let sols = solve(&tame_system()).unwrap();
        assert_eq!(sols.len(), 11);
        let sys = tame_system().with("a + c - b = 5").unwrap();
        let sols = solve(&sys).unwrap();
        assert_eq!(sols, vec![WeightSolution { values: vec![2, 3, 6] }]);
    }

    #[test]
    fn inconsistent_system() {
        let sys = CongruenceSystem::new(66, &["a"]).unwrap().with("a = 1; a = 2").unwrap();
        assert!(solve(&sys).unwrap().is_empty());
    }

    #[test]
    fn invariance_relations() {
        let mons = vec![vec![3, 0, 0], vec![0, 2, 0], vec![0, 0, 12], vec![0, 0, 1]];
        let sys = weights_from_invariance(&mons, &["a", "b", "c"], 66).unwrap();
        assert_eq!(sys.to_string(), "3a - 2b = 0; 2b - 12c = 0; 11c = 0 (mod 66)");
        let single = weights_from_invariance(&[vec![2, 0, 0]], &["a", "b", "c"], 66).unwrap();
        assert!(single.relations().is_empty());
    }

    #[test]
    fn four_unknown_weights() {
        let mons = vec![vec![2, 0, 0, 0], vec![0, 3, 0, 0], vec![0, 0, 11, 0], vec![0, 0, 0, 66]];
        let sys = weights_from_invariance(&mons, &["a", "b", "c", "d"], 66).unwrap();
        assert!(sys.satisfies(&[33, 22, 6, 1]));
        assert!(solve(&sys).unwrap().contains(&WeightSolution {
            values: vec![33, 22, 6, 1]
        }));
    }

    #[test]
    fn decompositions() {
        let d = order_decomposition(66, &RootOfUnity::new(66, 5).unwrap()).unwrap();
        assert_eq!(d.to_string(), "1.66");
        let d = order_decomposition(66, &RootOfUnity::new(6, -1).unwrap()).unwrap();
        assert_eq!(d.to_string(), "11.6");
        assert_eq!(order_decomposition(1, &RootOfUnity::one()).unwrap().to_string(), "1.1");
        assert!(order_decomposition(66, &RootOfUnity::primitive(4)).is_err());
    }

    #[test]
    fn parse_errors() {
        let mut sys = CongruenceSystem::new(66, &["a", "b"]).unwrap();
        assert!(sys.parse_relations("a + q = 1").is_err());
        assert!(sys.parse_relations("a + b").is_err());
        assert!(sys.parse_relations("2*a - b ≡ 4").is_ok());
        assert_eq!(sys.format_relation(&sys.relations()[0]), "2a - b = 4");
    }
}
