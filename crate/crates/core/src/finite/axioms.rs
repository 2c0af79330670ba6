use std::fmt;
use std::str::FromStr;

use super::{elements, FiniteSpace, Subset};
use crate::error::Error;

/// Largest size components are found by scanning every subset.
const SCAN_LIMIT: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    T0,
    T1,
    T2,
    Connected,
    LocallyConnected,
    /// Disjoint closed sets have disjoint open neighbourhoods. No `T1` assumed.
    NormalPairs,
}

impl Axiom {
    pub const ALL: [Axiom; 6] =
        [Axiom::T0, Axiom::T1, Axiom::T2, Axiom::Connected, Axiom::LocallyConnected, Axiom::NormalPairs];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::T0 => "T0",
            Axiom::T1 => "T1",
            Axiom::T2 => "T2",
            Axiom::Connected => "connected",
            Axiom::LocallyConnected => "locally-connected",
            Axiom::NormalPairs => "normal",
        })
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "t0" => Ok(Axiom::T0),
            "t1" => Ok(Axiom::T1),
            "t2" | "hausdorff" => Ok(Axiom::T2),
            "connected" => Ok(Axiom::Connected),
            "locally-connected" | "lc" => Ok(Axiom::LocallyConnected),
            "normal" | "normal-pairs" => Ok(Axiom::NormalPairs),
            _ => Err(Error::Parse(format!("unknown axiom `{s}`"))),
        }
    }
}

fn distinct_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
}

impl FiniteSpace {
    pub fn check_axiom(&self, axiom: Axiom) -> bool {
        let n = self.size();
        let bit = |x: usize| 1u8 << x;
        match axiom {
            Axiom::T0 => distinct_pairs(n)
                .all(|(x, y)| self.opens().any(|u| (u & bit(x) != 0) != (u & bit(y) != 0))),
            Axiom::T1 => distinct_pairs(n).all(|(x, y)| self.opens().any(|u| u & bit(x) != 0 && u & bit(y) == 0)),
            Axiom::T2 => distinct_pairs(n).all(|(x, y)| {
                self.opens().any(|u| u & bit(x) != 0 && self.opens().any(|v| v & bit(y) != 0 && u & v == 0))
            }),
            Axiom::Connected => self.is_connected_subset(self.full()),
            Axiom::LocallyConnected => (0..n).all(|x| {
                self.opens().filter(|&u| u & bit(x) != 0).all(|u| {
                    self.opens().any(|v| v & bit(x) != 0 && v & !u == 0 && self.is_connected_subset(v))
                })
            }),
            Axiom::NormalPairs => self.closeds().all(|f| {
                self.closeds().filter(|&g| f & g == 0).all(|g| {
                    self.opens().any(|u| u & f == f && self.opens().any(|v| v & g == g && u & v == 0))
                })
            }),
        }
    }

    /// No relatively open `W` with `∅ ≠ W ≠ A` has a relatively open complement in `A`.
    pub fn is_connected_subset(&self, set: Subset) -> bool {
        let traces: Vec<Subset> = self.opens().map(|u| u & set).collect();
        !traces.iter().any(|&w| w != 0 && w != set && traces.contains(&(set & !w)))
    }

    /// Each point's component is the union of every connected subset holding it.
    pub fn components_by_scan(&self) -> Vec<Subset> {
        let connected: Vec<Subset> = (1..=self.full()).filter(|&s| self.is_connected_subset(s)).collect();
        let mut found: Vec<Subset> = (0..self.size())
            .map(|x| connected.iter().filter(|&&s| s & (1 << x) != 0).fold(0, |acc, &s| acc | s))
            .collect();
        found.sort();
        found.dedup();
        found
    }

    /// Grow from each point by its minimal open set and its closure until stable.
    pub fn components_by_growth(&self) -> Vec<Subset> {
        let mut found: Vec<Subset> = (0..self.size())
            .map(|x| {
                let mut part: Subset = 1 << x;
                loop {
                    let grown = elements(part).fold(part, |acc, y| acc | self.minimal_open(y) | self.closure(1 << y));
                    if grown == part {
                        break part;
                    }
                    part = grown;
                }
            })
            .collect();
        found.sort();
        found.dedup();
        found
    }

    pub fn components(&self) -> Vec<Subset> {
        if self.size() <= SCAN_LIMIT {
            self.components_by_scan()
        } else {
            self.components_by_growth()
        }
    }
}
