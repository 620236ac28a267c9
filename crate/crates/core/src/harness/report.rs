use serde::{Deserialize, Serialize};

use crate::annprop::Verdict;

use super::corpus::Skip;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub structure: String,
    pub detail: String,
    /// Every registered theorem is proved, so a violation points at the code.
    pub severity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Verdict>,
}

impl Violation {
    pub fn new(structure: String, detail: String, witness: Option<Verdict>) -> Self {
        Violation {
            structure,
            detail,
            severity: "implementation-suspect".to_string(),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub id: String,
    pub statement: String,
    pub tested: usize,
    pub hypothesis_met: usize,
    pub violations: Vec<Violation>,
    pub skipped: Vec<Skip>,
}

/// Exploratory findings, never counted as violations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub id: String,
    pub statement: String,
    pub tested: usize,
    pub counterexamples: Vec<String>,
    pub result: String,
}

impl Observation {
    pub fn new(id: &str, statement: &str) -> Self {
        Observation {
            id: id.to_string(),
            statement: statement.to_string(),
            tested: 0,
            counterexamples: Vec::new(),
            result: String::new(),
        }
    }

    pub(crate) fn conclude(&mut self, none: &str, some: &str) {
        self.result = if self.counterexamples.is_empty() { none } else { some }.to_string();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u128,
    pub structures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub theorems: Vec<TheoremResult>,
    pub observations: Vec<Observation>,
    pub timing: Timing,
}

impl Report {
    pub fn violation_count(&self) -> usize {
        self.theorems.iter().map(|t| t.violations.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.violation_count() == 0
    }

    /// Report JSON with the timing block zeroed, for byte comparisons.
    pub fn deterministic_json(&self) -> String {
        let mut r = self.clone();
        r.timing.total_ms = 0;
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary, one line per theorem.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.theorems {
            let status = if t.violations.is_empty() { "ok  " } else { "FAIL" };
            out.push_str(&format!(
                "{status} {:<7} tested {:>4}  hypothesis met {:>4}  violations {}  skipped {}\n",
                t.id,
                t.tested,
                t.hypothesis_met,
                t.violations.len(),
                t.skipped.len()
            ));
            for v in &t.violations {
                out.push_str(&format!("       {}: {} [{}]\n", v.structure, v.detail, v.severity));
            }
        }
        for o in &self.observations {
            out.push_str(&format!("note {:<18} {} ({} tested)\n", o.id, o.result, o.tested));
            for c in &o.counterexamples {
                out.push_str(&format!("       {c}\n"));
            }
        }
        out.push_str(&format!(
            "{} structures, {} violations, {} ms\n",
            self.timing.structures,
            self.violation_count(),
            self.timing.total_ms
        ));
        out
    }
}
