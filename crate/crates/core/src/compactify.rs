//! Alexandroff one-point compactification `X ∪ {∞}` of a non-compact space.
//! Neighbourhoods of `∞` are complements of compact subsets of `X`.

use std::fmt;

use num::Signed;

use crate::connectify::ExtPoint;
use crate::error::{Error, Result};
use crate::exact::{int, Interval, IntervalSet, Rational};
use crate::space::Space;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactExtension {
    base: Space,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompactVerdict {
    Compactifiable(CompactExtension),
    /// `X` is already compact.
    Refused,
}

/// An open set of the compactification. `TypeInf` holds `∞` and has trace `X ∖ compact`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CompactOpenSet {
    TypeI { trace: IntervalSet },
    TypeInf { compact: IntervalSet },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompactRejection {
    NotSubset,
    TraceNotOpen,
    NotCompact,
}

impl fmt::Display for CompactRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompactRejection::NotSubset => "NotSubset",
            CompactRejection::TraceNotOpen => "TraceNotOpen",
            CompactRejection::NotCompact => "NotCompact",
        })
    }
}

/// Every canonical piece is closed and bounded.
pub fn is_space_compact(space: &Space) -> bool {
    space.is_compact()
}

pub fn compactify(space: &Space) -> CompactVerdict {
    if is_space_compact(space) {
        CompactVerdict::Refused
    } else {
        CompactVerdict::Compactifiable(CompactExtension { base: space.clone() })
    }
}

fn is_compact_set(set: &IntervalSet) -> bool {
    set.pieces().iter().all(Interval::is_compact)
}

impl CompactOpenSet {
    pub fn contains_infinity(&self) -> bool {
        matches!(self, CompactOpenSet::TypeInf { .. })
    }

    pub fn trace(&self, space: &Space) -> IntervalSet {
        match self {
            CompactOpenSet::TypeI { trace } => trace.clone(),
            CompactOpenSet::TypeInf { compact } => space.ambient().difference(compact),
        }
    }
}

impl fmt::Display for CompactOpenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactOpenSet::TypeI { trace } => write!(f, "variant=I trace={trace}"),
            CompactOpenSet::TypeInf { compact } => write!(f, "variant=Inf compact={compact}"),
        }
    }
}

impl CompactExtension {
    pub fn base(&self) -> &Space {
        &self.base
    }

    pub fn check_open(&self, set: &CompactOpenSet) -> std::result::Result<(), CompactRejection> {
        let x = self.base.ambient();
        match set {
            CompactOpenSet::TypeI { trace } => {
                if !trace.is_subset(x) {
                    return Err(CompactRejection::NotSubset);
                }
                if !trace.is_open_in(x).unwrap_or(false) {
                    return Err(CompactRejection::TraceNotOpen);
                }
            }
            CompactOpenSet::TypeInf { compact } => {
                if !compact.is_subset(x) {
                    return Err(CompactRejection::NotSubset);
                }
                // a compact subset of the line is closed, so its trace complement is open
                if !is_compact_set(compact) {
                    return Err(CompactRejection::NotCompact);
                }
            }
        }
        Ok(())
    }

    pub fn is_open_in_compactification(&self, set: &CompactOpenSet) -> bool {
        self.check_open(set).is_ok()
    }

    pub fn contains(&self, set: &CompactOpenSet, point: &ExtPoint) -> bool {
        match point {
            ExtPoint::Extra => set.contains_infinity(),
            ExtPoint::Base(q) => set.trace(&self.base).contains(q),
        }
    }

    /// A compact neighbourhood `K = [z-r, z+r] ∩ C` of `z` inside its
    /// component, with `r = 1` shrunk to half the distance to any excluded
    /// end of `C`.
    pub fn compact_neighbourhood(&self, z: &Rational) -> Result<IntervalSet> {
        let c = self.base.component_of(z).ok_or_else(|| Error::PointOutsideSpace(z.to_string()))?;
        let mut r = int(1);
        for end in [c.piece.lo(), c.piece.hi()] {
            if let (Some(v), false) = (end.finite(), end.included) {
                let half = (v - z).abs() / int(2);
                if half < r {
                    r = half;
                }
            }
        }
        Ok(IntervalSet::from(Interval::closed(z - &r, z + &r)?).intersect(&c.set()))
    }

    /// Disjoint open sets `(U, V)` with `y ∈ U`, `z ∈ V`; `ExtPoint::Extra` is `∞`.
    pub fn hausdorff_witness(&self, y: &ExtPoint, z: &ExtPoint) -> Result<(CompactOpenSet, CompactOpenSet)> {
        for point in [y, z] {
            if let ExtPoint::Base(q) = point {
                if !self.base.contains(q) {
                    return Err(Error::PointOutsideSpace(q.to_string()));
                }
            }
        }
        if y == z {
            return Err(Error::EqualPoints);
        }
        let x = self.base.ambient();
        match (y, z) {
            (ExtPoint::Base(a), ExtPoint::Base(b)) => {
                let m = (a + b) / int(2);
                let left = IntervalSet::from(Interval::below(m.clone())).intersect(x);
                let right = IntervalSet::from(Interval::above(m)).intersect(x);
                let (u, v) = if a < b { (left, right) } else { (right, left) };
                Ok((CompactOpenSet::TypeI { trace: u }, CompactOpenSet::TypeI { trace: v }))
            }
            (ExtPoint::Extra, ExtPoint::Base(b)) => self.separate_infinity_from(b),
            (ExtPoint::Base(a), ExtPoint::Extra) => {
                let (u, v) = self.separate_infinity_from(a)?;
                Ok((v, u))
            }
            (ExtPoint::Extra, ExtPoint::Extra) => unreachable!("equal points handled above"),
        }
    }

    fn separate_infinity_from(&self, z: &Rational) -> Result<(CompactOpenSet, CompactOpenSet)> {
        let k = self.compact_neighbourhood(z)?;
        let near = k.interior_in(self.base.ambient())?;
        Ok((CompactOpenSet::TypeInf { compact: k }, CompactOpenSet::TypeI { trace: near }))
    }

    /// Whether `sets` cover `X ∪ {∞}`.
    pub fn covers(&self, sets: &[&CompactOpenSet]) -> bool {
        let x = self.base.ambient();
        let union = sets.iter().fold(IntervalSet::empty(), |acc, s| acc.union(&s.trace(&self.base)));
        sets.iter().any(|s| s.contains_infinity()) && &union == x
    }

    /// Indices of a finite subcover.
    ///
    /// The first member holding `∞` leaves a compact remainder `K`. `K` is
    /// swept left to right: at its leftmost uncovered point the member whose
    /// piece through that point reaches furthest right is taken, and its
    /// whole trace removed from what is left.
    pub fn finite_subcover(&self, cover: &[CompactOpenSet]) -> Result<Vec<usize>> {
        for (i, set) in cover.iter().enumerate() {
            if let Err(r) = self.check_open(set) {
                return Err(Error::NotACover(format!("member {i} is not open: {r}")));
            }
        }
        let (first, compact) = cover
            .iter()
            .enumerate()
            .find_map(|(i, s)| match s {
                CompactOpenSet::TypeInf { compact } => Some((i, compact.clone())),
                _ => None,
            })
            .ok_or_else(|| Error::NotACover("no member contains infinity".into()))?;
        let traces: Vec<IntervalSet> = cover.iter().map(|s| s.trace(&self.base)).collect();
        let mut chosen = vec![first];
        let mut uncovered = compact;
        while let Some(piece) = uncovered.pieces().first() {
            let x = piece.lo().finite().expect("uncovered part stays compact").clone();
            let best = traces
                .iter()
                .enumerate()
                .filter(|(i, _)| !chosen.contains(i))
                .filter_map(|(i, t)| t.pieces().iter().find(|p| p.contains(&x)).map(|p| (i, p)))
                .max_by(|a, b| a.1.hi().cmp_as_upper(b.1.hi()).then(b.0.cmp(&a.0)));
            let Some((i, _)) = best else {
                return Err(Error::NotACover(format!("{x} is not covered")));
            };
            chosen.push(i);
            uncovered = uncovered.difference(&traces[i]);
        }
        chosen.sort_unstable();
        Ok(chosen)
    }
}
