//! One-point connectification.
//!
//! A space `X` with no compact component is extended by one point `p`.
//! Neighbourhoods of `p` are the open sets of `X` that contain, in every
//! component, some element of that component's escape filter. Witnesses
//! for density, connectedness, the Hausdorff property and normality are
//! built explicitly and can be re-checked with exact set arithmetic.

mod certify;
mod filter;
mod open;
mod witness;

use std::fmt;
use std::str::FromStr;

pub use certify::ClopenVerdict;
pub use filter::{Direction, EscapeFilter};
pub use open::{ExtClosedSet, ExtOpenSet, Rejection};
pub use witness::{ComponentPart, SetSeparation};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::space::{Component, Space};

/// A point of `X ∪ {p}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtPoint {
    Base(Rational),
    Extra,
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Base(q) => write!(f, "{q}"),
            ExtPoint::Extra => f.write_str("p"),
        }
    }
}

impl FromStr for ExtPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "p" => Ok(ExtPoint::Extra),
            other => parse_rational(other).map(ExtPoint::Base),
        }
    }
}

/// `Y = X ∪ {p}` with one escape filter per component of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    base: Space,
    filters: Vec<EscapeFilter>,
}

impl Extension {
    pub fn base(&self) -> &Space {
        &self.base
    }

    pub fn filters(&self) -> &[EscapeFilter] {
        &self.filters
    }

    pub fn components(&self) -> impl Iterator<Item = &Component> {
        self.filters.iter().map(|d| &d.component)
    }

    fn filter_of(&self, q: &Rational) -> Result<&EscapeFilter> {
        self.filters
            .iter()
            .find(|d| d.component.contains(q))
            .ok_or_else(|| Error::PointOutsideSpace(q.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Connectifiable(Extension),
    /// A compact component: it would be a nonempty proper clopen subset of
    /// any one-point Hausdorff extension.
    Refused { component: Component },
}

impl Verdict {
    pub fn extension(&self) -> Option<&Extension> {
        match self {
            Verdict::Connectifiable(y) => Some(y),
            Verdict::Refused { .. } => None,
        }
    }
}

/// Decide whether `X` has a one-point connectification, and build it if so.
pub fn check_connectifiable(space: &Space) -> Verdict {
    if let Some(component) = space.has_compact_component() {
        return Verdict::Refused { component };
    }
    let filters = space
        .components()
        .iter()
        .map(|c| EscapeFilter::choose(c).expect("no component is compact"))
        .collect();
    Verdict::Connectifiable(Extension { base: space.clone(), filters })
}
