use super::{enumerate_by_preorders, full_set, Axiom, FiniteSpace};
use crate::error::{Error, Result};

/// Largest extension size the search runs at.
pub const SEARCH_LIMIT: usize = 5;

/// Every connected topology on `|X| + 1` points whose first `|X|` points
/// form a dense copy of `X` and which satisfies `axiom`. The new point gets
/// the last label.
pub fn search_one_point_connectifications(x: &FiniteSpace, axiom: Axiom) -> Result<Vec<FiniteSpace>> {
    let size = x.size() + 1;
    if size > SEARCH_LIMIT {
        return Err(Error::SizeTooLarge { size, limit: SEARCH_LIMIT });
    }
    let base = full_set(x.size());
    Ok(enumerate_by_preorders(size)?
        .into_iter()
        .filter(|y| {
            y.subspace(base) == *x && y.is_dense(base) && y.check_axiom(Axiom::Connected) && y.check_axiom(axiom)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_discrete_points() {
        let x = FiniteSpace::discrete(2);
        let found = search_one_point_connectifications(&x, Axiom::T0).unwrap();
        // p must lie in the closure of both points: its only neighbourhood is Y
        let strings: Vec<String> = found.iter().map(|y| y.to_string()).collect();
        assert_eq!(strings, vec!["{},{0},{1},{0,1},{0,1,2}"]);
        assert!(search_one_point_connectifications(&x, Axiom::T2).unwrap().is_empty());
        assert!(search_one_point_connectifications(&x, Axiom::T1).unwrap().is_empty());
    }

    #[test]
    fn too_large() {
        let x = FiniteSpace::discrete(5);
        assert_eq!(
            search_one_point_connectifications(&x, Axiom::T0),
            Err(Error::SizeTooLarge { size: 6, limit: 5 })
        );
    }
}
