//! Replayable certificates made of exact interval-set assertions.

use std::fmt;

use crate::exact::{IntervalSet, Rational};

/// A single fact about interval sets that can be re-decided exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assertion {
    Subset(IntervalSet, IntervalSet),
    Equal(IntervalSet, IntervalSet),
    Nonempty(IntervalSet),
    Disjoint(IntervalSet, IntervalSet),
    /// First set closed in the second.
    ClosedIn(IntervalSet, IntervalSet),
    /// First set open in the second.
    OpenIn(IntervalSet, IntervalSet),
    /// A single interval, hence connected.
    Connected(IntervalSet),
    Member(Rational, IntervalSet),
    NonMember(Rational, IntervalSet),
}

impl Assertion {
    pub fn holds(&self) -> bool {
        use Assertion::*;
        match self {
            Subset(a, b) => a.is_subset(b),
            Equal(a, b) => a == b,
            Nonempty(a) => !a.is_empty(),
            Disjoint(a, b) => a.is_disjoint(b),
            ClosedIn(a, b) => a.is_closed_in(b).unwrap_or(false),
            OpenIn(a, b) => a.is_open_in(b).unwrap_or(false),
            Connected(a) => a.is_interval(),
            Member(q, a) => a.contains(q),
            NonMember(q, a) => !a.contains(q),
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Assertion::*;
        match self {
            Subset(a, b) => write!(f, "subset {a} <= {b}"),
            Equal(a, b) => write!(f, "equal {a} == {b}"),
            Nonempty(a) => write!(f, "nonempty {a}"),
            Disjoint(a, b) => write!(f, "disjoint {a} ; {b}"),
            ClosedIn(a, b) => write!(f, "closed-in {a} ; {b}"),
            OpenIn(a, b) => write!(f, "open-in {a} ; {b}"),
            Connected(a) => write!(f, "connected {a}"),
            Member(q, a) => write!(f, "member {q} in {a}"),
            NonMember(q, a) => write!(f, "non-member {q} in {a}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub label: String,
    pub assertion: Assertion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: String,
    pub steps: Vec<Step>,
    pub conclusion: String,
}

impl Certificate {
    pub fn new(kind: impl Into<String>) -> Self {
        Certificate { kind: kind.into(), steps: Vec::new(), conclusion: String::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, assertion: Assertion) {
        self.steps.push(Step { label: label.into(), assertion });
    }

    /// The 1-based number of the first step that fails, if any.
    pub fn first_failure(&self) -> Option<usize> {
        self.steps.iter().position(|s| !s.assertion.holds()).map(|i| i + 1)
    }

    pub fn replay(&self) -> bool {
        self.first_failure().is_none()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {} steps={}", self.kind, self.steps.len())?;
        for (i, step) in self.steps.iter().enumerate() {
            let status = if step.assertion.holds() { "ok" } else { "FAIL" };
            writeln!(f, "step {} {} {} {}", i + 1, step.label, step.assertion, status)?;
        }
        write!(f, "conclusion {}", self.conclusion)
    }
}
