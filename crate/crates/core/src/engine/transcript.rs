//! Proof steps and transcripts with a stable JSON encoding.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Axiom,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Axiom => "axiom",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "tame")]
    Tame,
    #[serde(rename = "complex")]
    Complex,
    #[serde(rename = "wild-11")]
    Wild,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Tame => "tame",
            CaseTag::Complex => "complex",
            CaseTag::Wild => "wild-11",
        })
    }
}

/// One checked computation or one cited axiom.
///
/// `reference` names the module operation that reproduces `computed` from
/// `inputs`, or the fact-table id for axiom steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofStep {
    pub id: String,
    pub desc: String,
    pub inputs: BTreeMap<String, String>,
    pub computed: String,
    pub expected: String,
    pub verdict: Verdict,
    pub reference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTranscript {
    pub case: CaseTag,
    pub characteristic: String,
    pub steps: Vec<ProofStep>,
    pub verdict: Verdict,
}

impl ProofTranscript {
    pub fn new(case: CaseTag, characteristic: u64, steps: Vec<ProofStep>) -> Self {
        let ok = steps.iter().all(|s| s.verdict != Verdict::Fail);
        ProofTranscript {
            case,
            characteristic: characteristic.to_string(),
            steps,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed_step(&self) -> Option<&ProofStep> {
        self.steps.iter().find(|s| s.verdict == Verdict::Fail)
    }

    pub fn step(&self, id: &str) -> Option<&ProofStep> {
        self.steps.iter().find(|s| s.id == id)
    }

    /// Fact ids cited by axiom steps, in order of first use.
    pub fn cited_facts(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for s in self.steps.iter().filter(|s| s.verdict == Verdict::Axiom) {
            if !out.contains(&s.reference.as_str()) {
                out.push(&s.reference);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("transcript serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One line per step.
    pub fn summary(&self, verbose: bool) -> String {
        let mut out = format!("case {} (characteristic {})\n", self.case, self.characteristic);
        for s in &self.steps {
            out.push_str(&format!(
                "  [{:<5}] {:<30} {}\n",
                s.verdict.to_string(),
                s.id,
                s.computed
            ));
            if verbose {
                out.push_str(&format!("          {}\n", s.desc));
                for (k, v) in &s.inputs {
                    out.push_str(&format!("          {k} = {v}\n"));
                }
                if s.verdict != Verdict::Axiom {
                    out.push_str(&format!("          expected {}\n", s.expected));
                }
                out.push_str(&format!("          via {}\n", s.reference));
            }
        }
        match self.failed_step() {
            Some(s) => out.push_str(&format!("verdict: fail at {}\n", s.id)),
            None => out.push_str(&format!("verdict: {}\n", self.verdict)),
        }
        out
    }
}
