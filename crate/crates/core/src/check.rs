//! Named identity checks collected into reports.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Both sides of a failed identity plus the inputs that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub ring: String,
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(name: impl Into<String>, cx: Counterexample) -> Self {
        Check {
            name: name.into(),
            passed: false,
            counterexample: Some(cx),
        }
    }

    /// Compares two displayable values; records them on mismatch.
    pub fn equal<T: PartialEq + fmt::Display>(
        name: impl Into<String>,
        ring: &impl fmt::Display,
        inputs: &[(&str, String)],
        lhs: &T,
        rhs: &T,
    ) -> Self {
        if lhs == rhs {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                Counterexample {
                    ring: ring.to_string(),
                    inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                },
            )
        }
    }

    /// A predicate that should hold; `detail` describes the offending value.
    pub fn holds(name: impl Into<String>, ok: bool, ring: &impl fmt::Display, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                Counterexample {
                    ring: ring.to_string(),
                    inputs: Vec::new(),
                    lhs: detail(),
                    rhs: String::from("true"),
                },
            )
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}
