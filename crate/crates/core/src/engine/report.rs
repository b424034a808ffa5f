//! Supersingularity of the Delsarte model `x66` in characteristic `p`.

use std::fmt;

use serde::Serialize;

use crate::arithmetic::field::{fp2, Fp};
use crate::arithmetic::{count_points, supersingular_congruence_test, supersingular_count_prediction};
use crate::elliptic::y66;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountComparison {
    pub q: String,
    pub count: String,
    /// `1 + 22q + q^2`, compared only over `F_{p^2}`.
    pub prediction: Option<String>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupersingularityReport {
    pub p: String,
    pub modulus: String,
    pub supersingular: bool,
    pub nu: Option<String>,
    pub order: String,
    pub counts: Vec<CountComparison>,
}

/// The congruence test for `(p, 66)`; for `p = 11` also the counts of `y66`.
pub fn supersingularity_report(p: u64) -> Result<SupersingularityReport> {
    const M: u64 = 66;
    if p == 11 {
        let counts = [count_points(&y66(), &Fp::new(11)?)?, count_points(&y66(), &fp2(11)?)?]
            .into_iter()
            .map(|r| {
                let pred = (r.q == 121).then(|| supersingular_count_prediction(r.q));
                CountComparison {
                    q: r.q.to_string(),
                    count: r.total.to_string(),
                    prediction: pred.map(|n| n.to_string()),
                    matches: pred.map(|n| n == r.total),
                }
            })
            .collect();
        return Ok(SupersingularityReport {
            p: "11".into(),
            modulus: M.to_string(),
            supersingular: true,
            nu: None,
            order: "-".into(),
            counts,
        });
    }
    if M.is_multiple_of(p) {
        return Err(Error::InvalidArgument(format!("{p} divides {M}")));
    }
    let w = supersingular_congruence_test(p, M)?;
    Ok(SupersingularityReport {
        p: p.to_string(),
        modulus: M.to_string(),
        supersingular: w.supersingular,
        nu: w.nu.map(|n| n.to_string()),
        order: w.order.to_string(),
        counts: Vec::new(),
    })
}

impl SupersingularityReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for SupersingularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.nu {
            Some(nu) => writeln!(
                f,
                "p = {}: {}^{nu} = -1 (mod {}), supersingular: yes",
                self.p, self.p, self.modulus
            )?,
            None if self.counts.is_empty() => writeln!(
                f,
                "p = {}: -1 is not a power of p mod {} (order {}), supersingular: no",
                self.p, self.modulus, self.order
            )?,
            None => writeln!(f, "p = {}: y66 point counts", self.p)?,
        }
        if !self.counts.is_empty() {
            writeln!(f, "  {:>5}  {:>8}  {:>10}  match", "q", "count", "1+22q+q^2")?;
            for c in &self.counts {
                let pred = c.prediction.as_deref().unwrap_or("-");
                let m = match c.matches {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "-",
                };
                writeln!(f, "  {:>5}  {:>8}  {:>10}  {m}", c.q, c.count, pred)?;
            }
        }
        Ok(())
    }
}
