//! Identity-check reports shared by the verification suites.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub identity: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub witness: Option<String>,
    /// Non-blocking entries are reported but do not affect [`IdentityReport::passed`].
    pub blocking: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct IdentityReport {
    pub subject: String,
    pub results: Vec<IdentityResult>,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn new(subject: impl Into<String>) -> Self {
        IdentityReport {
            subject: subject.into(),
            results: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed || !r.blocking)
    }

    pub fn get(&self, identity: &str) -> Option<&IdentityResult> {
        self.results.iter().find(|r| r.identity == identity)
    }

    pub fn push(&mut self, r: IdentityResult) {
        self.results.push(r);
    }
}

/// Accumulates one identity over many cases, keeping the first witness.
#[derive(Clone, Debug)]
pub struct Tally {
    identity: String,
    cases: usize,
    failures: usize,
    witness: Option<String>,
    blocking: bool,
}

impl Tally {
    pub fn new(identity: &str) -> Self {
        Tally {
            identity: identity.to_string(),
            cases: 0,
            failures: 0,
            witness: None,
            blocking: true,
        }
    }

    pub fn non_blocking(mut self) -> Self {
        self.blocking = false;
        self
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn finish(self) -> IdentityResult {
        IdentityResult {
            identity: self.identity,
            passed: self.witness.is_none(),
            cases: self.cases,
            failures: self.failures,
            witness: self.witness,
            blocking: self.blocking,
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for r in &self.results {
            let status = match (r.passed, r.blocking) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "FAIL (non-blocking)",
            };
            write!(f, "  {:<28} {:<20} cases={}", r.identity, status, r.cases)?;
            if r.failures > 0 {
                write!(f, " failures={}", r.failures)?;
            }
            if let Some(w) = &r.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
