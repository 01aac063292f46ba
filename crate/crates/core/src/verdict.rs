use std::fmt;

/// The first counterexample found by an axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Name of the violated law, e.g. `coassociativity` or `right-counit`.
    pub law: &'static str,
    /// The basis element (or tuple of them) where the law fails.
    pub witness: String,
    pub expected: String,
    pub actual: String,
}

impl Violation {
    pub fn new(law: &'static str, witness: impl Into<String>) -> Self {
        Violation {
            law,
            witness: witness.into(),
            expected: String::new(),
            actual: String::new(),
        }
    }

    pub fn with_sides(mut self, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        self.expected = expected.into();
        self.actual = actual.into();
        self
    }

    /// Re-labels the violation under an enclosing law, keeping the inner one in the witness.
    pub fn within(self, law: &'static str, context: &str) -> Self {
        Violation {
            law,
            witness: format!("{context}: {} at {}", self.law, self.witness),
            expected: self.expected,
            actual: self.actual,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.law, self.witness)?;
        if !self.expected.is_empty() || !self.actual.is_empty() {
            write!(f, " (expected {}, got {})", self.expected, self.actual)?;
        }
        Ok(())
    }
}

/// Construction errors met while checking a law are reported as violations.
impl From<crate::error::Error> for Violation {
    fn from(e: crate::error::Error) -> Self {
        Violation::new("construction", e.to_string())
    }
}

/// Outcome of an axiom check: `Ok(())` or the first violation.
pub type Verdict = Result<(), Violation>;
