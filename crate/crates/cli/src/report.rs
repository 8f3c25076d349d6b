//! Check reports: stable, sorted, machine-diffable.

use opsplit_core::algebra::{Violation, ViolationReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictLine {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ViolationLine {
    pub relation: String,
    pub triple: Vec<usize>,
    pub residual: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub command: String,
    pub verdicts: Vec<VerdictLine>,
    pub violations: Vec<ViolationLine>,
    pub truncated: bool,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn new(command: &str) -> Self {
        CheckReport {
            command: command.to_string(),
            verdicts: Vec::new(),
            violations: Vec::new(),
            truncated: false,
            elapsed_ms: 0,
        }
    }

    pub fn verdict(&mut self, name: &str, ok: bool) {
        self.verdicts.push(VerdictLine {
            name: name.to_string(),
            ok,
        });
    }

    /// Absorb a relation-check report as one named verdict plus its
    /// violation samples.
    pub fn absorb(&mut self, name: &str, vr: &ViolationReport) {
        self.verdict(name, vr.ok);
        self.truncated |= vr.truncated;
        for v in &vr.violations {
            self.violations.push(match v {
                Violation::Relation {
                    relation,
                    triple,
                    residual,
                } => ViolationLine {
                    relation: format!("{name}:relation {relation}"),
                    triple: vec![triple.0, triple.1, triple.2],
                    residual: residual.iter().map(|s| s.to_string()).collect(),
                },
                Violation::Symmetry { pair, residual } => ViolationLine {
                    relation: format!("{name}:symmetry"),
                    triple: vec![pair.0, pair.1],
                    residual: residual.iter().map(|s| s.to_string()).collect(),
                },
            });
        }
        self.violations.sort();
    }

    pub fn all_ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok)
    }

    pub fn emit(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        if self.all_ok() {
            out.push_str(&format!("OK ({} ms)\n", self.elapsed_ms));
            return out;
        }
        for v in &self.verdicts {
            out.push_str(&format!(
                "{}: {}\n",
                v.name,
                if v.ok { "ok" } else { "FAIL" }
            ));
        }
        for v in &self.violations {
            out.push_str(&format!(
                "violation {} at {:?}: residual [{}]\n",
                v.relation,
                v.triple,
                v.residual.join(", ")
            ));
        }
        if self.truncated {
            out.push_str("(violation list truncated)\n");
        }
        out.push_str(&format!("({} ms)\n", self.elapsed_ms));
        out
    }
}
