use super::{elements, full_set, FiniteSpace, Subset, MAX_SIZE};

/// A reflexive, transitive relation; `up[x]` is the set of `y` with `x <= y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Preorder {
    size: usize,
    up: [Subset; MAX_SIZE],
}

impl Preorder {
    pub fn new(size: usize, up: [Subset; MAX_SIZE]) -> Option<Self> {
        let p = Preorder { size, up };
        p.is_valid().then_some(p)
    }

    pub fn equality(size: usize) -> Self {
        let mut up = [0; MAX_SIZE];
        for (x, row) in up.iter_mut().enumerate().take(size) {
            *row = 1 << x;
        }
        Preorder { size, up }
    }

    pub fn total(size: usize) -> Self {
        let mut up = [0; MAX_SIZE];
        for row in up.iter_mut().take(size) {
            *row = full_set(size);
        }
        Preorder { size, up }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x] & (1 << y) != 0
    }

    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    fn is_valid(&self) -> bool {
        let full = full_set(self.size);
        (0..self.size).all(|x| {
            let row = self.up[x];
            row & !full == 0 && self.le(x, x) && elements(row).all(|y| self.up[y] & !row == 0)
        }) && self.up[self.size..].iter().all(|&r| r == 0)
    }

    /// Specialisation order: `x <= y` iff every open set containing `x` contains `y`.
    pub fn from_topology(t: &FiniteSpace) -> Self {
        let mut up = [0; MAX_SIZE];
        for (x, row) in up.iter_mut().enumerate().take(t.size()) {
            *row = t.minimal_open(x);
        }
        Preorder { size: t.size(), up }
    }

    /// Opens are the up-closed sets.
    pub fn to_topology(&self) -> FiniteSpace {
        let opens = (0..=full_set(self.size))
            .filter(|&u| elements(u).all(|x| self.up[x] & !u == 0))
            .fold(0u64, |acc, u| acc | (1u64 << u));
        FiniteSpace::from_mask(self.size, opens)
    }

    /// All ways to add a new top-labelled point `n` to this preorder on `n` points.
    pub(super) fn extensions(&self) -> impl Iterator<Item = Preorder> + '_ {
        let n = self.size;
        let full = full_set(n);
        let down_of = move |x: usize| (0..n).filter(|&y| self.le(y, x)).fold(0, |acc, y| acc | (1 << y));
        (0..=full).flat_map(move |below: Subset| {
            // elements below the new point: down-closed
            let down_closed = elements(below).all(|x| down_of(x) & !below == 0);
            (0..=full).filter_map(move |above: Subset| {
                if !down_closed {
                    return None;
                }
                let up_closed = elements(above).all(|x| self.up[x] & !above == 0);
                let chained = elements(below).all(|a| self.up[a] & above == above);
                if !up_closed || !chained {
                    return None;
                }
                let mut up = self.up;
                for a in elements(below) {
                    up[a] |= 1 << n;
                }
                up[n] = above | (1 << n);
                Some(Preorder { size: n + 1, up })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_correspondences() {
        assert_eq!(Preorder::from_topology(&FiniteSpace::discrete(3)), Preorder::equality(3));
        assert_eq!(Preorder::equality(3).to_topology(), FiniteSpace::discrete(3));
        assert_eq!(Preorder::from_topology(&FiniteSpace::indiscrete(3)), Preorder::total(3));
        assert_eq!(Preorder::total(3).to_topology(), FiniteSpace::indiscrete(3));
        // Sierpinski: the closed point 1 lies below the open point 0
        let chain = Preorder::from_topology(&FiniteSpace::sierpinski());
        assert!(chain.le(1, 0) && !chain.le(0, 1));
        assert_eq!(chain.to_topology(), FiniteSpace::sierpinski());
    }

    #[test]
    fn validity() {
        let mut up = [0; MAX_SIZE];
        up[0] = 0b011;
        up[1] = 0b110;
        up[2] = 0b100;
        // 0 <= 1 <= 2 without 0 <= 2
        assert!(Preorder::new(3, up).is_none());
        up[0] = 0b111;
        assert!(Preorder::new(3, up).is_some());
    }
}
