//! A nonempty interval set regarded as a topological space under the
//! subspace topology of the real line.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{int, Endpoint, Interval, IntervalSet, Rational, Value};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    ambient: IntervalSet,
}

/// A maximal connected subset: one canonical piece of the space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub piece: Interval,
    pub index: usize,
}

impl Component {
    /// Heine–Borel: closed and bounded.
    pub fn is_compact(&self) -> bool {
        self.piece.is_compact()
    }

    pub fn set(&self) -> IntervalSet {
        self.piece.clone().into()
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.piece.contains(q)
    }

    /// The `C#i` label used in records.
    pub fn label(&self) -> String {
        format!("C#{}", self.index)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.piece)
    }
}

impl Space {
    pub fn new(ambient: IntervalSet) -> Result<Self> {
        if ambient.is_empty() {
            return Err(Error::EmptySpace);
        }
        Ok(Space { ambient })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Space::new(text.parse()?)
    }

    pub fn ambient(&self) -> &IntervalSet {
        &self.ambient
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.ambient.contains(q)
    }

    pub fn components(&self) -> Vec<Component> {
        self.ambient
            .pieces()
            .iter()
            .enumerate()
            .map(|(index, piece)| Component { piece: piece.clone(), index })
            .collect()
    }

    pub fn component_of(&self, q: &Rational) -> Option<Component> {
        self.components().into_iter().find(|c| c.contains(q))
    }

    pub fn has_compact_component(&self) -> Option<Component> {
        self.components().into_iter().find(Component::is_compact)
    }

    pub fn is_compact(&self) -> bool {
        self.ambient.pieces().iter().all(Interval::is_compact)
    }

    pub fn is_open(&self, set: &IntervalSet) -> Result<bool> {
        set.is_open_in(&self.ambient)
    }

    pub fn is_closed(&self, set: &IntervalSet) -> Result<bool> {
        set.is_closed_in(&self.ambient)
    }

    /// For every component `C`, an open interval `W` of the line with
    /// `W ∩ X = C`. This shows each component is open in `X`.
    ///
    /// An excluded or infinite end of `C` is used as-is; an included end is
    /// pushed out to the facing end of the neighbouring piece, or by one unit
    /// when there is no neighbour.
    pub fn local_connectedness_certificate(&self) -> LocalConnectedness {
        let pieces = self.ambient.pieces();
        let windows = self
            .components()
            .into_iter()
            .map(|c| {
                let i = c.index;
                let lo = c.piece.lo();
                let hi = c.piece.hi();
                let left = if lo.included {
                    match i.checked_sub(1).map(|j| &pieces[j]) {
                        Some(prev) => prev.hi().value.clone(),
                        None => Value::Finite(lo.finite().unwrap() - int(1)),
                    }
                } else {
                    lo.value.clone()
                };
                let right = if hi.included {
                    match pieces.get(i + 1) {
                        Some(next) => next.lo().value.clone(),
                        None => Value::Finite(hi.finite().unwrap() + int(1)),
                    }
                } else {
                    hi.value.clone()
                };
                let window = Interval::new(
                    Endpoint { value: left, included: false },
                    Endpoint { value: right, included: false },
                )
                .expect("window strictly contains a nonempty component");
                (c, window)
            })
            .collect();
        LocalConnectedness { windows }
    }

    /// Disjoint open sets of `X` around two disjoint closed sets of `X`.
    ///
    /// The pieces of `F` and `G` are swept left to right. Wherever the owner
    /// changes, the line is cut at the midpoint of the gap, or at the gap
    /// itself when it is a single point missing from `X`. Each run of
    /// same-owner pieces gets the open cell between its cuts, the outermost
    /// cells extending to infinity.
    pub fn separate_disjoint_closed(
        &self,
        f: &IntervalSet,
        g: &IntervalSet,
    ) -> Result<(IntervalSet, IntervalSet)> {
        for set in [f, g] {
            if !self.is_closed(set)? {
                return Err(Error::NotClosed(set.to_string()));
            }
        }
        if !f.is_disjoint(g) {
            return Err(Error::NotDisjoint(f.to_string(), g.to_string()));
        }
        if f.is_empty() {
            return Ok((IntervalSet::empty(), self.ambient.clone()));
        }

        let mut tagged: Vec<(bool, &Interval)> = f
            .pieces()
            .iter()
            .map(|p| (true, p))
            .chain(g.pieces().iter().map(|p| (false, p)))
            .collect();
        tagged.sort_by(|a, b| a.1.lo().cmp_as_lower(b.1.lo()));

        let mut u_cells = Vec::new();
        let mut v_cells = Vec::new();
        let mut cell_start = Endpoint::neg_inf();
        for (i, (owner, piece)) in tagged.iter().enumerate() {
            let cut = match tagged.get(i + 1) {
                Some((next_owner, next)) if next_owner != owner => {
                    let a = piece.hi().finite().expect("a later piece exists, so this end is finite");
                    let b = next.lo().finite().expect("an earlier piece exists, so this end is finite");
                    Some((a + b) / int(2))
                }
                Some(_) => continue,
                None => None,
            };
            let cell_end = match &cut {
                Some(c) => Endpoint::open(c.clone()),
                None => Endpoint::pos_inf(),
            };
            let cell = Interval::new(cell_start.clone(), cell_end).expect("cuts are strictly increasing");
            if *owner { u_cells.push(cell) } else { v_cells.push(cell) }
            if let Some(c) = cut {
                cell_start = Endpoint::open(c);
            }
        }
        let u = IntervalSet::normalize(u_cells).intersect(&self.ambient);
        let v = IntervalSet::normalize(v_cells).intersect(&self.ambient);
        Ok((u, v))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ambient)
    }
}

/// Open windows of the line cutting out each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalConnectedness {
    pub windows: Vec<(Component, Interval)>,
}

impl LocalConnectedness {
    /// Re-check every window: open in the line and `W ∩ X = C`.
    pub fn verify(&self, space: &Space) -> bool {
        self.windows.len() == space.components().len()
            && self.windows.iter().all(|(c, w)| {
                !w.lo().included
                    && !w.hi().included
                    && IntervalSet::from(w.clone()).intersect(space.ambient()) == c.set()
            })
    }
}
