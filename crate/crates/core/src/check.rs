//! Structured check results, the common currency of the verification runs.

/// One verified (or falsified) statement, with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Machine-stable name of the check instance.
    pub name: String,
    /// Short identifier of the mathematical property being checked.
    pub anchor: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check { name: name.into(), anchor: anchor.into(), pass: true, witness: None }
    }

    pub fn fail(
        name: impl Into<String>,
        anchor: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }

    pub fn from_result<T>(
        name: impl Into<String>,
        anchor: impl Into<String>,
        r: &crate::error::Result<T>,
    ) -> Self {
        match r {
            Ok(_) => Check::pass(name, anchor),
            Err(e) => Check::fail(name, anchor, e.to_string()),
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn failures(checks: &[Check]) -> Vec<&Check> {
    checks.iter().filter(|c| !c.pass).collect()
}
