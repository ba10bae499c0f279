use serde::Serialize;

/// One named check with the least failing tuple, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<u64>>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, witness: Option<Vec<u64>>) -> Self {
        CheckOutcome {
            name: name.into(),
            pass: witness.is_none(),
            witness,
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Self {
        CheckOutcome {
            name: name.into(),
            pass,
            witness: None,
        }
    }
}

/// An ordered list of check outcomes. Axiom sweeps and embedding
/// verifications both produce one.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

pub type AxiomReport = Report;
pub type VerificationReport = Report;

impl Report {
    pub fn push(&mut self, outcome: CheckOutcome) {
        self.checks.push(outcome);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// `name: pass` / `name: FAIL witness (..)` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.witness {
                _ if c.pass => out.push_str(&format!("  {:<28} pass\n", c.name)),
                Some(w) => out.push_str(&format!("  {:<28} FAIL  witness {:?}\n", c.name, w)),
                None => out.push_str(&format!("  {:<28} FAIL\n", c.name)),
            }
        }
        out
    }
}
