//! Topologies on `{0, .., n-1}` for `n <= 6`, as a brute-force oracle.
//!
//! A subset is a `u8` bit mask; a family of subsets is a `u64` bit mask
//! indexed by subset code, so a whole topology fits in one word.

mod axioms;
mod enumerate;
mod preorder;
mod search;

use std::fmt;
use std::str::FromStr;

pub use axioms::Axiom;
pub use enumerate::{enumerate_by_families, enumerate_by_preorders, enumerate_topologies, Enumeration};
pub use preorder::Preorder;
pub use search::search_one_point_connectifications;

use crate::error::{Error, Result};

pub const MAX_SIZE: usize = 6;

pub type Subset = u8;

pub fn full_set(size: usize) -> Subset {
    ((1u16 << size) - 1) as Subset
}

pub fn elements(set: Subset) -> impl Iterator<Item = usize> {
    (0..8).filter(move |i| set & (1 << i) != 0)
}

/// A topology given by its explicit family of open sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSpace {
    size: usize,
    opens: u64,
}

fn family_mask(family: &[Subset]) -> u64 {
    family.iter().fold(0, |acc, &s| acc | (1u64 << s))
}

/// Contains `∅` and the full set, and is closed under pairwise union and intersection.
pub fn validate_topology(size: usize, family: &[Subset]) -> bool {
    if size > MAX_SIZE {
        return false;
    }
    let full = full_set(size);
    if family.iter().any(|&s| s & !full != 0) {
        return false;
    }
    let mask = family_mask(family);
    let has = |s: Subset| mask & (1u64 << s) != 0;
    has(0) && has(full) && family.iter().all(|&a| family.iter().all(|&b| has(a | b) && has(a & b)))
}

impl FiniteSpace {
    pub fn new(size: usize, family: &[Subset]) -> Result<Self> {
        if size > MAX_SIZE {
            return Err(Error::SizeTooLarge { size, limit: MAX_SIZE });
        }
        if !validate_topology(size, family) {
            return Err(Error::Parse(format!("not a topology on {size} points")));
        }
        Ok(FiniteSpace { size, opens: family_mask(family) })
    }

    pub(crate) fn from_mask(size: usize, opens: u64) -> Self {
        FiniteSpace { size, opens }
    }

    pub fn discrete(size: usize) -> Self {
        let family: Vec<Subset> = (0..=full_set(size)).collect();
        FiniteSpace::new(size, &family).expect("power set")
    }

    pub fn indiscrete(size: usize) -> Self {
        FiniteSpace::new(size, &[0, full_set(size)]).expect("trivial topology")
    }

    pub fn sierpinski() -> Self {
        FiniteSpace::new(2, &[0b00, 0b01, 0b11]).expect("Sierpinski space")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full(&self) -> Subset {
        full_set(self.size)
    }

    pub fn opens_mask(&self) -> u64 {
        self.opens
    }

    pub fn opens(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..=self.full()).filter(move |&s| self.is_open(s))
    }

    pub fn is_open(&self, set: Subset) -> bool {
        self.opens & (1u64 << set) != 0
    }

    pub fn is_closed(&self, set: Subset) -> bool {
        self.is_open(self.full() & !set)
    }

    pub fn closeds(&self) -> impl Iterator<Item = Subset> + '_ {
        self.opens().map(move |u| self.full() & !u)
    }

    /// Smallest closed superset.
    pub fn closure(&self, set: Subset) -> Subset {
        let outside = self.opens().filter(|&u| u & set == 0).fold(0, |acc, u| acc | u);
        self.full() & !outside
    }

    /// Smallest open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> Subset {
        self.opens().filter(|&u| u & (1 << x) != 0).fold(self.full(), |acc, u| acc & u)
    }

    /// Trace topology on `subset`, relabelled `0..|subset|` in increasing order.
    pub fn subspace(&self, subset: Subset) -> FiniteSpace {
        let points: Vec<usize> = elements(subset).collect();
        let compress = |u: Subset| {
            points.iter().enumerate().fold(0, |acc, (i, &p)| if u & (1 << p) != 0 { acc | (1 << i) } else { acc })
        };
        let opens = self.opens().fold(0u64, |acc, u| acc | (1u64 << compress(u & subset)));
        FiniteSpace { size: points.len(), opens }
    }

    /// The only closed superset of `subset` is the whole space.
    pub fn is_dense(&self, subset: Subset) -> bool {
        self.closure(subset) == self.full()
    }

    pub fn dump(&self) -> String {
        self.to_string()
    }
}

fn format_subset(set: Subset) -> String {
    let items: Vec<String> = elements(set).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Opens sorted by size, then lexicographically by elements.
impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut opens: Vec<Subset> = self.opens().collect();
        opens.sort_by_key(|&s| (s.count_ones(), elements(s).collect::<Vec<_>>()));
        let parts: Vec<String> = opens.into_iter().map(format_subset).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FiniteSpace {
    type Err = Error;

    /// `{},{0},{0,1}`: the point count is one more than the largest label.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad topology literal `{s}`"));
        let mut family = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(bad)?;
            let close = body.find('}').ok_or_else(bad)?;
            let mut set: Subset = 0;
            for item in body[..close].split(',').filter(|t| !t.is_empty()) {
                let i: usize = item.parse().map_err(|_| bad())?;
                if i >= MAX_SIZE {
                    return Err(Error::SizeTooLarge { size: i + 1, limit: MAX_SIZE });
                }
                set |= 1 << i;
            }
            family.push(set);
            rest = &body[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                rest = r;
            }
        }
        let size = family.iter().map(|&s| 8 - s.leading_zeros() as usize).max().ok_or_else(bad)?;
        FiniteSpace::new(size, &family)
    }
}
