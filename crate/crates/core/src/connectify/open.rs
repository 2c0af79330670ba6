//! Open and closed sets of the extension `Y = X ∪ {p}`.

use std::fmt;

use super::{ExtPoint, Extension};
use crate::exact::{IntervalSet, Rational};

/// An open set of the extension.
///
/// `TypeI` is an open set of `X` and misses `p`. `TypeII` contains `p`;
/// its trace must be open in `X` and contain element `tails[i]` of the
/// escape filter of component `i`, for every component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtOpenSet {
    TypeI { trace: IntervalSet },
    TypeII { trace: IntervalSet, tails: Vec<u64> },
}

/// A closed set of the extension: whether it holds `p`, and its trace on `X`.
/// It is closed exactly when its complement is an [`ExtOpenSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtClosedSet {
    pub contains_extra: bool,
    pub trace: IntervalSet,
}

/// Why a candidate fails to be open in the extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    TraceNotSubset,
    /// The trace is not open in `X`; `point` lies in the trace but not in its interior.
    TraceNotOpen { point: Rational },
    /// No element of the filter of this component lies in the trace.
    MissingTail { component: usize },
    /// The recorded element index is too small to fit in the trace.
    ShallowTail { component: usize, index: u64, required: u64 },
    WrongTailCount { expected: usize, got: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::TraceNotSubset => f.write_str("TraceNotSubset"),
            Rejection::TraceNotOpen { point } => write!(f, "TraceNotOpen point={point}"),
            Rejection::MissingTail { component } => write!(f, "MissingTail C#{component}"),
            Rejection::ShallowTail { component, index, required } => {
                write!(f, "ShallowTail C#{component}:{index} required={required}")
            }
            Rejection::WrongTailCount { expected, got } => write!(f, "WrongTailCount expected={expected} got={got}"),
        }
    }
}

impl ExtOpenSet {
    pub fn empty() -> Self {
        ExtOpenSet::TypeI { trace: IntervalSet::empty() }
    }

    pub fn trace(&self) -> &IntervalSet {
        match self {
            ExtOpenSet::TypeI { trace } | ExtOpenSet::TypeII { trace, .. } => trace,
        }
    }

    pub fn contains_extra(&self) -> bool {
        matches!(self, ExtOpenSet::TypeII { .. })
    }

    pub fn tails(&self) -> Option<&[u64]> {
        match self {
            ExtOpenSet::TypeI { .. } => None,
            ExtOpenSet::TypeII { tails, .. } => Some(tails),
        }
    }

    pub fn contains(&self, point: &ExtPoint) -> bool {
        match point {
            ExtPoint::Extra => self.contains_extra(),
            ExtPoint::Base(q) => self.trace().contains(q),
        }
    }

    pub fn is_disjoint(&self, other: &ExtOpenSet) -> bool {
        !(self.contains_extra() && other.contains_extra()) && self.trace().is_disjoint(other.trace())
    }

    /// Finite intersection. Two neighbourhoods of `p` meet in a
    /// neighbourhood of `p` whose tails are the deeper of the two, since the
    /// filters are descending.
    pub fn intersect(&self, other: &ExtOpenSet) -> ExtOpenSet {
        let trace = self.trace().intersect(other.trace());
        match (self, other) {
            (ExtOpenSet::TypeII { tails: a, .. }, ExtOpenSet::TypeII { tails: b, .. }) => {
                let tails = a.iter().zip(b).map(|(m, n)| *m.max(n)).collect();
                ExtOpenSet::TypeII { trace, tails }
            }
            _ => ExtOpenSet::TypeI { trace },
        }
    }

    /// Union of a finite family. Any member containing `p` makes the union a
    /// neighbourhood of `p`; its tails are the shallowest on offer.
    pub fn union_all<'a>(sets: impl IntoIterator<Item = &'a ExtOpenSet>) -> ExtOpenSet {
        let mut trace = IntervalSet::empty();
        let mut tails: Option<Vec<u64>> = None;
        for set in sets {
            trace = trace.union(set.trace());
            if let ExtOpenSet::TypeII { tails: t, .. } = set {
                tails = Some(match tails {
                    None => t.clone(),
                    Some(cur) => cur.iter().zip(t).map(|(m, n)| *m.min(n)).collect(),
                });
            }
        }
        match tails {
            None => ExtOpenSet::TypeI { trace },
            Some(tails) => ExtOpenSet::TypeII { trace, tails },
        }
    }

    pub fn union(&self, other: &ExtOpenSet) -> ExtOpenSet {
        ExtOpenSet::union_all([self, other])
    }

    /// Complement in `Y`, as a closed set.
    pub fn complement(&self, space: &IntervalSet) -> ExtClosedSet {
        ExtClosedSet { contains_extra: !self.contains_extra(), trace: space.difference(self.trace()) }
    }
}

impl fmt::Display for ExtOpenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOpenSet::TypeI { trace } => write!(f, "variant=I trace={trace}"),
            ExtOpenSet::TypeII { trace, tails } => {
                write!(f, "variant=II trace={trace} tails=")?;
                for (i, n) in tails.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "C#{i}:{n}")?;
                }
                Ok(())
            }
        }
    }
}

impl ExtClosedSet {
    pub fn extra() -> Self {
        ExtClosedSet { contains_extra: true, trace: IntervalSet::empty() }
    }

    pub fn contains(&self, point: &ExtPoint) -> bool {
        match point {
            ExtPoint::Extra => self.contains_extra,
            ExtPoint::Base(q) => self.trace.contains(q),
        }
    }

    /// Parse `p`, `SET`, or `p+SET`.
    pub fn parse(text: &str) -> crate::Result<Self> {
        let text = text.trim();
        if text == "p" {
            return Ok(ExtClosedSet::extra());
        }
        match text.strip_prefix("p+") {
            Some(rest) => Ok(ExtClosedSet { contains_extra: true, trace: rest.parse()? }),
            None => Ok(ExtClosedSet { contains_extra: false, trace: text.parse()? }),
        }
    }
}

impl fmt::Display for ExtClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.contains_extra, self.trace.is_empty()) {
            (true, true) => f.write_str("p"),
            (true, false) => write!(f, "p+{}", self.trace),
            (false, _) => write!(f, "{}", self.trace),
        }
    }
}

impl Extension {
    fn boundary_point(&self, trace: &IntervalSet) -> Option<Rational> {
        let interior = trace.interior_in(self.base().ambient()).ok()?;
        trace.difference(&interior).sample_point()
    }

    fn check_trace(&self, trace: &IntervalSet) -> Result<(), Rejection> {
        let x = self.base().ambient();
        if !trace.is_subset(x) {
            return Err(Rejection::TraceNotSubset);
        }
        match self.boundary_point(trace) {
            Some(point) => Err(Rejection::TraceNotOpen { point }),
            None => Ok(()),
        }
    }

    /// Least element index per component fitting inside `trace`.
    pub fn required_tails(&self, trace: &IntervalSet) -> Result<Vec<u64>, Rejection> {
        self.filters()
            .iter()
            .map(|d| d.least_index_within(trace).ok_or(Rejection::MissingTail { component: d.component.index }))
            .collect()
    }

    /// Full openness check with the reason for failure.
    pub fn check_open(&self, set: &ExtOpenSet) -> Result<(), Rejection> {
        self.check_trace(set.trace())?;
        if let ExtOpenSet::TypeII { trace, tails } = set {
            let expected = self.filters().len();
            if tails.len() != expected {
                return Err(Rejection::WrongTailCount { expected, got: tails.len() });
            }
            let required = self.required_tails(trace)?;
            for (i, (&index, &required)) in tails.iter().zip(&required).enumerate() {
                if index < required {
                    return Err(Rejection::ShallowTail { component: i, index, required });
                }
            }
        }
        Ok(())
    }

    pub fn is_open_in_extension(&self, set: &ExtOpenSet) -> bool {
        self.check_open(set).is_ok()
    }

    /// The neighbourhood of `p` with the given trace and the least valid tails.
    pub fn neighbourhood(&self, trace: IntervalSet) -> Result<ExtOpenSet, Rejection> {
        self.check_trace(&trace)?;
        let tails = self.required_tails(&trace)?;
        Ok(ExtOpenSet::TypeII { trace, tails })
    }

    /// Complement of a closed set, if it is open.
    pub fn open_complement(&self, set: &ExtClosedSet) -> Result<ExtOpenSet, Rejection> {
        if !set.trace.is_subset(self.base().ambient()) {
            return Err(Rejection::TraceNotSubset);
        }
        let trace = self.base().ambient().difference(&set.trace);
        if set.contains_extra {
            self.check_trace(&trace)?;
            Ok(ExtOpenSet::TypeI { trace })
        } else {
            self.neighbourhood(trace)
        }
    }

    pub fn is_closed_in_extension(&self, set: &ExtClosedSet) -> bool {
        self.open_complement(set).is_ok()
    }

    /// `Y` itself.
    pub fn whole(&self) -> ExtOpenSet {
        ExtOpenSet::TypeII { trace: self.base().ambient().clone(), tails: vec![0; self.filters().len()] }
    }
}
