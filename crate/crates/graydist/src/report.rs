use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of one axiom instance inside a suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckInstance {
    pub tag: String,
    pub pass: bool,
    /// Concrete counterexample, empty on pass.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub witness: String,
}

impl CheckInstance {
    pub fn pass(tag: impl Into<String>) -> Self {
        CheckInstance {
            tag: tag.into(),
            pass: true,
            witness: String::new(),
        }
    }

    pub fn fail(tag: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckInstance {
            tag: tag.into(),
            pass: false,
            witness: witness.into(),
        }
    }

    pub fn of(tag: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(tag),
            Some(w) => Self::fail(tag, w),
        }
    }
}

/// Result of a law suite: pass/fail per axiom instance, with witnesses.
/// Overall pass iff every instance passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub instances: Vec<CheckInstance>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            instances: Vec::new(),
        }
    }

    pub fn push(&mut self, instance: CheckInstance) {
        self.instances.push(instance);
    }

    pub fn record(&mut self, tag: impl Into<String>, witness: Option<String>) {
        self.instances.push(CheckInstance::of(tag, witness));
    }

    /// Merge another report's instances, prefixing their tags.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut inst in other.instances {
            if !prefix.is_empty() {
                inst.tag = format!("{prefix}{}", inst.tag);
            }
            self.instances.push(inst);
        }
    }

    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.pass)
    }

    pub fn failing_tags(&self) -> Vec<&str> {
        self.instances
            .iter()
            .filter(|i| !i.pass)
            .map(|i| i.tag.as_str())
            .collect()
    }

    /// Deterministic order for serialization: sort instances by tag.
    pub fn sorted(mut self) -> Self {
        self.instances.sort_by(|a, b| a.tag.cmp(&b.tag));
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for inst in &self.instances {
            if inst.pass {
                writeln!(f, "  [pass] {}", inst.tag)?;
            } else {
                writeln!(f, "  [FAIL] {}  {}", inst.tag, inst.witness)?;
            }
        }
        Ok(())
    }
}
