//! Step-by-step assembly of a transcript; the first failing step halts the run.

use std::collections::BTreeMap;
use std::fmt::Display;

use super::facts::FactTable;
use super::transcript::{ProofStep, Verdict};
use crate::error::Result;

/// Marker returned once a step has failed.
#[derive(Debug)]
pub(crate) struct Halted;

pub(crate) type Flow<T> = std::result::Result<T, Halted>;

pub(crate) struct Recorder {
    facts: FactTable,
    allowed: Vec<&'static str>,
    pub(crate) steps: Vec<ProofStep>,
}

impl Recorder {
    pub(crate) fn new(allowed: Vec<&'static str>) -> Self {
        Recorder {
            facts: FactTable::standard(),
            allowed,
            steps: Vec::new(),
        }
    }

    pub(crate) fn step<'a>(&'a mut self, id: &str, desc: &str, reference: &str) -> Step<'a> {
        Step {
            rec: self,
            id: id.to_string(),
            desc: desc.to_string(),
            reference: reference.to_string(),
            inputs: BTreeMap::new(),
        }
    }

    /// Cites one conclusion of a fact.
    pub(crate) fn axiom(&mut self, id: &str, fact: &str, conclusion: usize) -> Flow<()> {
        self.cite(id, fact, Some(conclusion))
    }

    /// Cites a fact with all of its alternative conclusions.
    pub(crate) fn axiom_all(&mut self, id: &str, fact: &str) -> Flow<()> {
        self.cite(id, fact, None)
    }

    fn cite(&mut self, id: &str, fact: &str, pick: Option<usize>) -> Flow<()> {
        let known = self.facts.get(fact).filter(|_| self.allowed.contains(&fact));
        let stated = known.and_then(|a| match pick {
            Some(i) => a.conclusions.get(i).map(|c| (a.hypothesis, c.to_string())),
            None => Some((a.hypothesis, a.conclusions.join(" | "))),
        });
        let (desc, computed, verdict) = match stated {
            Some((h, c)) => (h.to_string(), c, Verdict::Axiom),
            None => (
                "undeclared fact".to_string(),
                format!("fact `{fact}` is not declared for this case"),
                Verdict::Fail,
            ),
        };
        self.steps.push(ProofStep {
            id: id.to_string(),
            desc,
            inputs: BTreeMap::new(),
            computed,
            expected: String::new(),
            verdict,
            reference: fact.to_string(),
        });
        if verdict == Verdict::Fail {
            Err(Halted)
        } else {
            Ok(())
        }
    }
}

pub(crate) struct Step<'a> {
    rec: &'a mut Recorder,
    id: String,
    desc: String,
    reference: String,
    inputs: BTreeMap<String, String>,
}

impl Step<'_> {
    pub(crate) fn input(mut self, key: &str, value: impl Display) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    fn push(self, computed: String, expected: String, verdict: Verdict) -> Flow<()> {
        self.rec.steps.push(ProofStep {
            id: self.id,
            desc: self.desc,
            inputs: self.inputs,
            computed,
            expected,
            verdict,
            reference: self.reference,
        });
        if verdict == Verdict::Fail {
            Err(Halted)
        } else {
            Ok(())
        }
    }

    /// Passes iff the two renderings agree.
    pub(crate) fn expect(self, computed: impl Display, expected: impl Display) -> Flow<()> {
        let (c, e) = (computed.to_string(), expected.to_string());
        let v = if c == e { Verdict::Pass } else { Verdict::Fail };
        self.push(c, e, v)
    }

    pub(crate) fn judge(self, computed: impl Display, expected: impl Display, ok: bool) -> Flow<()> {
        let v = if ok { Verdict::Pass } else { Verdict::Fail };
        self.push(computed.to_string(), expected.to_string(), v)
    }

    /// Unwraps a module result, or records the error as this step's failure.
    pub(crate) fn value<T>(self, r: Result<T>) -> Flow<(T, Self)> {
        match r {
            Ok(v) => Ok((v, self)),
            Err(e) => {
                self.push(format!("error: {e}"), String::new(), Verdict::Fail)?;
                Err(Halted)
            }
        }
    }
}
