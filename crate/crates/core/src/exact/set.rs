use std::fmt;

use super::interval::{gaps, merge, Endpoint, Interval, Rational, Value};
use crate::error::{Error, Result};

/// A finite union of intervals in canonical form.
///
/// Pieces are sorted, pairwise disjoint, and no two neighbours could be
/// merged into one interval. The canonical form of a set is unique, so
/// structural equality is set equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    pieces: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { pieces: Vec::new() }
    }

    pub fn real_line() -> Self {
        IntervalSet { pieces: vec![Interval::real_line()] }
    }

    /// Canonical form of the union of `raw`. Order and overlap are irrelevant.
    pub fn normalize(raw: Vec<Interval>) -> Self {
        IntervalSet { pieces: merge(raw) }
    }

    /// Like [`IntervalSet::normalize`] but validates each raw pair first.
    pub fn from_endpoints(raw: Vec<(Endpoint, Endpoint)>) -> Result<Self> {
        let pieces = raw
            .into_iter()
            .map(|(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalize(pieces))
    }

    pub fn pieces(&self) -> &[Interval] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    /// A single (nonempty) interval, i.e. a connected subset of the line.
    pub fn is_interval(&self) -> bool {
        self.pieces.len() == 1
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.pieces.iter().any(|p| p.contains(q))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut raw = self.pieces.clone();
        raw.extend(other.pieces.iter().cloned());
        IntervalSet::normalize(raw)
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut raw = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                if let Some(c) = a.intersect(b) {
                    raw.push(c);
                }
            }
        }
        IntervalSet::normalize(raw)
    }

    /// Complement within the real line.
    pub fn complement(&self) -> IntervalSet {
        IntervalSet { pieces: gaps(&self.pieces) }
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &IntervalSet) -> bool {
        self.intersect(other).is_empty()
    }

    /// Closure in the real line.
    pub fn real_closure(&self) -> IntervalSet {
        IntervalSet::normalize(self.pieces.iter().map(Interval::real_closure).collect())
    }

    /// A deterministic member of the set, if any.
    pub fn sample_point(&self) -> Option<Rational> {
        let first = self.pieces.first()?;
        if first.lo().included {
            return first.lo().finite().cloned();
        }
        Some(first.interior_point())
    }

    /// Reflection through 0.
    pub fn reflect(&self) -> IntervalSet {
        IntervalSet::normalize(self.pieces.iter().map(Interval::reflect).collect())
    }

    fn require_subset(&self, ambient: &IntervalSet) -> Result<()> {
        if self.is_subset(ambient) {
            Ok(())
        } else {
            Err(Error::NotASubset { set: self.to_string(), ambient: ambient.to_string() })
        }
    }

    /// Closure of `self` in the subspace `ambient`: `cl(self) ∩ ambient`.
    pub fn closure_in(&self, ambient: &IntervalSet) -> Result<IntervalSet> {
        self.require_subset(ambient)?;
        Ok(self.real_closure().intersect(ambient))
    }

    /// Interior of `self` in the subspace `ambient`.
    pub fn interior_in(&self, ambient: &IntervalSet) -> Result<IntervalSet> {
        self.require_subset(ambient)?;
        let outside = ambient.difference(self);
        Ok(ambient.difference(&outside.real_closure()))
    }

    pub fn is_open_in(&self, ambient: &IntervalSet) -> Result<bool> {
        Ok(&self.interior_in(ambient)? == self)
    }

    pub fn is_closed_in(&self, ambient: &IntervalSet) -> Result<bool> {
        Ok(&self.closure_in(ambient)? == self)
    }

    /// Smallest and largest finite coordinates mentioned by the set.
    pub fn finite_span(&self) -> Option<(Rational, Rational)> {
        let values: Vec<&Rational> = self
            .pieces
            .iter()
            .flat_map(|p| [p.lo().finite(), p.hi().finite()])
            .flatten()
            .collect();
        let lo = values.iter().min()?;
        let hi = values.iter().max()?;
        Some(((*lo).clone(), (*hi).clone()))
    }

    pub fn is_bounded_above(&self) -> bool {
        self.pieces.last().is_none_or(|p| p.hi().value != Value::PosInf)
    }
}

impl From<Interval> for IntervalSet {
    fn from(piece: Interval) -> Self {
        IntervalSet { pieces: vec![piece] }
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<I: IntoIterator<Item = Interval>>(iter: I) -> Self {
        IntervalSet::normalize(iter.into_iter().collect())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return f.write_str("{}");
        }
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" U ")?;
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}
