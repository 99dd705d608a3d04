//! Verdict reports shared by every checker.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Stored witnesses per check are capped; the total count is kept separately.
pub const MAX_WITNESSES: usize = 32;

/// A concrete violation: the basis indices involved and the nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub residual: String,
}

impl Witness {
    pub fn new(indices: Vec<usize>, residual: impl Into<String>) -> Self {
        Witness { indices, residual: residual.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of violations found (may exceed `witnesses.len()`).
    pub violations: usize,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, violations: 0, witnesses: Vec::new(), note: None }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check { name: name.into(), passed: false, violations: 1, witnesses: vec![witness], note: None }
    }

    /// Passes iff `witnesses` is empty.
    pub fn from_witnesses(name: impl Into<String>, mut witnesses: Vec<Witness>) -> Self {
        let violations = witnesses.len();
        witnesses.truncate(MAX_WITNESSES);
        Check { name: name.into(), passed: violations == 0, violations, witnesses, note: None }
    }

    /// Boolean verdict; `witness` is attached only when `ok` is false.
    pub fn verdict(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn with(mut self, check: Check) -> Self {
        self.push(check);
        self
    }

    /// Appends the checks of `other`, prefixing their names with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Verdict of a named check; `None` if it was not run.
    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.check(name).map(|c| c.passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
            if let Some(n) = &c.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
            for w in &c.witnesses {
                writeln!(f, "      at {:?}: {}", w.indices, w.residual)?;
            }
            if c.violations > c.witnesses.len() {
                writeln!(f, "      ... {} more", c.violations - c.witnesses.len())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_has_witness() {
        let c = Check::from_witnesses("x", vec![Witness::new(vec![0, 1], "2")]);
        assert!(!c.passed);
        assert_eq!(c.witnesses.len(), 1);
        assert!(Check::from_witnesses("y", vec![]).passed);
    }

    #[test]
    fn witnesses_are_capped() {
        let ws = (0..100).map(|i| Witness::new(vec![i], "1")).collect();
        let c = Check::from_witnesses("x", ws);
        assert_eq!(c.violations, 100);
        assert_eq!(c.witnesses.len(), MAX_WITNESSES);
    }

    #[test]
    fn absorb_prefixes_names() {
        let mut r = Report::new("outer");
        r.absorb("inner", Report::new("inner").with(Check::pass("jacobi")));
        assert_eq!(r.verdict("inner.jacobi"), Some(true));
    }
}
