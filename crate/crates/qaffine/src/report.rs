//! Pass/fail reports produced by the relation and equation verifiers.
//!
//! Key items:
//! - [`Check`]: one named check with its outcome and an optional detail line.
//! - [`Report`]: an ordered list of checks for one verification subject.
//! - [`CheckMode`]: exact symbolic verification versus randomized modular
//!   probing with a seed.
//!
//! Reports are plain data: verifiers record what they checked and whether it
//! held, and callers decide how to react. Check names are stable strings so
//! downstream tooling can match on them.

use serde::{Deserialize, Serialize};
use std::fmt;

/// How a matrix identity should be verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckMode {
    /// Expand both sides symbolically and compare exactly.
    Exact,
    /// Evaluate both sides at random points modulo a fixed prime. The check is
    /// one-sided: a failure is definitive, a pass carries an explicit
    /// Schwartz-Zippel failure bound recorded in the report detail.
    ModP {
        /// Number of agreeing evaluation points required.
        trials: u32,
        /// Seed of the deterministic point stream.
        seed: u64,
    },
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckMode::Exact => write!(f, "exact"),
            CheckMode::ModP { trials, seed } => {
                write!(f, "modp(trials={trials}, seed={seed})")
            }
        }
    }
}

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Stable identifier, e.g. `ef-commutator[0,1]`.
    pub name: String,
    /// Whether the checked identity held.
    pub passed: bool,
    /// Human-readable context: what failed, or probabilistic bounds for
    /// sampled checks. Empty for unremarkable passes.
    pub detail: String,
}

/// An ordered collection of checks for one verification subject.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// What was verified, e.g. a representation or equation name.
    pub subject: String,
    /// Checks in the order they were run.
    pub checks: Vec<Check>,
}

impl Report {
    /// Creates an empty report for the given subject.
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    /// Records a check outcome without detail text.
    pub fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: String::new(),
        });
    }

    /// Records a check outcome with a detail line.
    pub fn record_detail(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// True when every check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The checks that failed, in run order.
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Number of recorded checks.
    pub fn len(&self) -> usize {
        self.checks.len()
    }

    /// True when no checks were recorded.
    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// Appends all checks of another report, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  {status}  {}", c.name)?;
            } else {
                writeln!(f, "  {status}  {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- aggregation ----

    #[test]
    fn all_passed_reflects_every_check() {
        let mut r = Report::new("demo");
        r.record("first", true);
        assert!(r.all_passed());
        r.record_detail("second", false, "mismatch at (0, 1)");
        assert!(!r.all_passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.failures().next().unwrap().name, "second");
    }

    #[test]
    fn absorb_prefixes_names() {
        let mut inner = Report::new("inner");
        inner.record("x", true);
        let mut outer = Report::new("outer");
        outer.absorb("sub/", inner);
        assert_eq!(outer.checks[0].name, "sub/x");
    }

    // ---- rendering ----

    #[test]
    fn display_marks_failures() {
        let mut r = Report::new("demo");
        r.record("good", true);
        r.record_detail("bad", false, "why");
        let s = r.to_string();
        assert!(s.contains("pass  good"));
        assert!(s.contains("FAIL  bad: why"));
    }

    #[test]
    fn serializes_round_trip() {
        let mut r = Report::new("demo");
        r.record("only", true);
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
