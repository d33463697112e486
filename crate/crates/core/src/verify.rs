//! Identity checks report the first failing index instead of panicking, so
//! the same predicates serve tests and command-line diagnostics.

use std::fmt;

/// First counterexample found by an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub identity: &'static str,
    pub at: String,
    pub expected: String,
    pub found: String,
}

impl Mismatch {
    pub fn new(
        identity: &'static str,
        at: impl Into<String>,
        expected: impl fmt::Display,
        found: impl fmt::Display,
    ) -> Self {
        Self {
            identity,
            at: at.into(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at {}: expected {}, found {}",
            self.identity, self.at, self.expected, self.found
        )
    }
}

impl std::error::Error for Mismatch {}

pub type Verdict = Result<(), Mismatch>;

/// `Ok` when `expected == found`, otherwise a [`Mismatch`] at `at`.
pub(crate) fn expect_eq<T: PartialEq + fmt::Display>(
    identity: &'static str,
    at: impl FnOnce() -> String,
    expected: &T,
    found: &T,
) -> Verdict {
    if expected == found {
        Ok(())
    } else {
        Err(Mismatch::new(identity, at(), expected, found))
    }
}
