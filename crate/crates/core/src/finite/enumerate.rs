use std::collections::BTreeSet;

use super::{full_set, validate_topology, FiniteSpace, Preorder, Subset, MAX_SIZE};
use crate::error::{Error, Result};

/// Largest size the family filter is run at.
pub const FAMILY_LIMIT: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub size: usize,
    /// Sorted by open-set mask.
    pub topologies: Vec<FiniteSpace>,
    /// Both enumerators ran and agreed.
    pub cross_checked: bool,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.topologies.len()
    }
}

/// Filter every family containing `∅` and the full set.
pub fn enumerate_by_families(size: usize) -> Result<Vec<FiniteSpace>> {
    if size > FAMILY_LIMIT {
        return Err(Error::SizeTooLarge { size, limit: FAMILY_LIMIT });
    }
    let full = full_set(size);
    let free: Vec<Subset> = (0..=full).filter(|&s| s != 0 && s != full).collect();
    let mut found = Vec::new();
    for choice in 0u32..(1 << free.len()) {
        let mut family = vec![0, full];
        family.extend(free.iter().enumerate().filter(|(i, _)| choice & (1 << i) != 0).map(|(_, &s)| s));
        if validate_topology(size, &family) {
            found.push(FiniteSpace::new(size, &family)?);
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// Grow preorders one point at a time and map each to its topology.
pub fn enumerate_by_preorders(size: usize) -> Result<Vec<FiniteSpace>> {
    if size > MAX_SIZE {
        return Err(Error::SizeTooLarge { size, limit: MAX_SIZE });
    }
    let mut layer = vec![Preorder::equality(0)];
    for _ in 0..size {
        layer = layer.iter().flat_map(|p| p.extensions()).collect();
    }
    let mut found: Vec<FiniteSpace> = layer.iter().map(Preorder::to_topology).collect();
    found.sort();
    Ok(found)
}

pub fn enumerate_topologies(size: usize) -> Result<Enumeration> {
    let topologies = enumerate_by_preorders(size)?;
    let distinct: BTreeSet<_> = topologies.iter().collect();
    if distinct.len() != topologies.len() {
        return Err(Error::EnumeratorDisagreement(format!("preorder enumeration repeated a topology on {size} points")));
    }
    let cross_checked = size <= FAMILY_LIMIT;
    if cross_checked {
        let by_families = enumerate_by_families(size)?;
        if by_families != topologies {
            return Err(Error::EnumeratorDisagreement(format!(
                "{} topologies by families, {} by preorders on {size} points",
                by_families.len(),
                topologies.len()
            )));
        }
    }
    Ok(Enumeration { size, topologies, cross_checked })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts_agree() {
        let expected = [1, 1, 4, 29, 355];
        for (n, &count) in expected.iter().enumerate() {
            let e = enumerate_topologies(n).unwrap();
            assert!(e.cross_checked);
            assert_eq!(e.count(), count, "n={n}");
        }
    }

    #[test]
    fn preorder_counts() {
        assert_eq!(enumerate_by_preorders(5).unwrap().len(), 6942);
    }

    #[test]
    fn size_limits() {
        assert_eq!(enumerate_by_families(5), Err(Error::SizeTooLarge { size: 5, limit: 4 }));
        assert_eq!(enumerate_topologies(7), Err(Error::SizeTooLarge { size: 7, limit: 6 }));
    }
}
