//! Pass/fail reports for pointwise identity checks.
//!
//! Every checker evaluates a list of named identities over all tuples of
//! arguments and records, per identity, either a pass or the first
//! (lexicographically least) argument tuple that violates it.

use alloc::vec::Vec;
use core::fmt;

/// Outcome of one identity check: `witness` is `None` on pass, or the
/// first violating argument tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub identity: &'static str,
    pub witness: Option<Vec<usize>>,
}

impl CheckOutcome {
    pub fn pass(identity: &'static str) -> CheckOutcome {
        CheckOutcome { identity, witness: None }
    }

    pub fn fail(identity: &'static str, witness: Vec<usize>) -> CheckOutcome {
        CheckOutcome { identity, witness: Some(witness) }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass", self.identity),
            Some(w) => write!(f, "{}: fail at {:?}", self.identity, w),
        }
    }
}

/// An ordered list of identity outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn push(&mut self, outcome: CheckOutcome) {
        self.outcomes.push(outcome);
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, o) in self.outcomes.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{o}")?;
        }
        Ok(())
    }
}
