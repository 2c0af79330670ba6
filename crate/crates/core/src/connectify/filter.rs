//! Escape filters: descending chains of nonempty closed subsets of a
//! non-compact component, marching off one of its non-compact ends, with
//! empty total intersection.
//!
//! Left-pointing filters are handled as right-pointing ones on the reflected
//! component; `Oriented` carries that normalisation.

use std::fmt;

use num::{BigInt, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Endpoint, Interval, IntervalSet, Rational, Value};
use crate::space::Component;

/// The non-compact end a filter escapes through.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    TowardPosInf,
    TowardNegInf,
    /// Toward an excluded finite right end `b`.
    TowardOpenRight(Rational),
    /// Toward an excluded finite left end `a`.
    TowardOpenLeft(Rational),
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::TowardPosInf => f.write_str("+inf"),
            Direction::TowardNegInf => f.write_str("-inf"),
            Direction::TowardOpenRight(b) => write!(f, "right:{b}"),
            Direction::TowardOpenLeft(a) => write!(f, "left:{a}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EscapeFilter {
    pub component: Component,
    pub direction: Direction,
    pub anchor: Rational,
}

/// A filter seen after reflecting left-pointing directions to the right.
/// Element `n` is `[start(n), end) ∩ C`.
struct Oriented {
    /// `None` for an unbounded end, `Some(b)` for an excluded end `b`.
    end: Option<Rational>,
    anchor: Rational,
    mirrored: bool,
}

fn pow2(n: u64) -> BigInt {
    BigInt::one() << n
}

fn bit_length(k: &BigInt) -> u64 {
    k.bits()
}

fn to_index(k: BigInt) -> Result<u64> {
    k.to_u64().ok_or_else(|| Error::InvalidExtension(format!("filter index {k} exceeds 2^64-1")))
}

impl Oriented {
    fn start(&self, n: u64) -> Rational {
        match &self.end {
            None => &self.anchor + Rational::from_integer(n.into()),
            Some(b) => b - (b - &self.anchor) / Rational::from_integer(pow2(n)),
        }
    }

    /// Least `n` with `start(n) > c` (strict) or `start(n) >= c`.
    fn first_index_past(&self, c: &Rational, strict: bool) -> Result<u64> {
        let a = &self.anchor;
        if (strict && c < a) || (!strict && c <= a) {
            return Ok(0);
        }
        match &self.end {
            None => {
                let d = c - a;
                if strict {
                    to_index(d.floor().to_integer() + 1)
                } else {
                    to_index(d.ceil().to_integer())
                }
            }
            Some(b) => {
                if c >= b {
                    return Err(Error::InvalidExtension(format!("{c} is beyond the escape end {b}")));
                }
                let ratio = (b - a) / (b - c);
                if strict {
                    // 2^n > ratio  <=>  2^n > floor(ratio)
                    Ok(bit_length(&ratio.floor().to_integer()))
                } else {
                    // 2^n >= ratio  <=>  2^n >= ceil(ratio)
                    let k: BigInt = ratio.ceil().to_integer() - 1;
                    Ok(if k.is_zero() { 0 } else { bit_length(&k) })
                }
            }
        }
    }
}

impl EscapeFilter {
    /// Pick the escape end of a non-compact component: the right end when it
    /// is infinite or excluded, otherwise the left end.
    pub fn choose(component: &Component) -> Result<EscapeFilter> {
        let piece = &component.piece;
        if piece.is_compact() {
            return Err(Error::CompactComponent(piece.to_string()));
        }
        let direction = match (&piece.hi().value, piece.hi().included) {
            (Value::PosInf, _) => Direction::TowardPosInf,
            (Value::Finite(b), false) => Direction::TowardOpenRight(b.clone()),
            _ => match &piece.lo().value {
                Value::NegInf => Direction::TowardNegInf,
                Value::Finite(a) => Direction::TowardOpenLeft(a.clone()),
                Value::PosInf => unreachable!("left end is never +inf"),
            },
        };
        Ok(EscapeFilter { component: component.clone(), direction, anchor: piece.interior_point() })
    }

    fn oriented(&self) -> Oriented {
        match &self.direction {
            Direction::TowardPosInf => Oriented { end: None, anchor: self.anchor.clone(), mirrored: false },
            Direction::TowardOpenRight(b) => {
                Oriented { end: Some(b.clone()), anchor: self.anchor.clone(), mirrored: false }
            }
            Direction::TowardNegInf => Oriented { end: None, anchor: -&self.anchor, mirrored: true },
            Direction::TowardOpenLeft(a) => Oriented { end: Some(-a), anchor: -&self.anchor, mirrored: true },
        }
    }

    fn oriented_set(&self, set: &IntervalSet) -> IntervalSet {
        if self.oriented().mirrored { set.reflect() } else { set.clone() }
    }

    fn end_point(o: &Oriented) -> Endpoint {
        match &o.end {
            None => Endpoint::pos_inf(),
            Some(b) => Endpoint::open(b.clone()),
        }
    }

    /// The included inner end of element `n` (the point nearest the anchor).
    pub fn inner_bound(&self, n: u64) -> Rational {
        let o = self.oriented();
        let s = o.start(n);
        if o.mirrored { -s } else { s }
    }

    /// Element `n`: `[anchor+n, inf)`, `[b-(b-anchor)/2^n, b)`, or the mirror
    /// images, intersected with the component. The cost grows with `n` for
    /// the bounded directions since `2^n` is materialised exactly.
    pub fn element(&self, n: u64) -> IntervalSet {
        let o = self.oriented();
        let piece = Interval::new(Endpoint::closed(o.start(n)), Self::end_point(&o))
            .expect("start lies strictly before the escape end");
        let set = IntervalSet::from(piece);
        let set = if o.mirrored { set.reflect() } else { set };
        set.intersect(&self.component.set())
    }

    /// An open set of the component containing element `n`: the element
    /// pushed back toward the anchor by the gap to element `n+1` (one unit
    /// for unbounded ends).
    pub fn open_tail(&self, n: u64) -> IntervalSet {
        let o = self.oriented();
        let s = o.start(n);
        let back = match &o.end {
            None => int(1),
            Some(_) => o.start(n + 1) - &s,
        };
        let piece = Interval::new(Endpoint::open(s - back), Self::end_point(&o))
            .expect("tail start lies before the escape end");
        let set = IntervalSet::from(piece);
        let set = if o.mirrored { set.reflect() } else { set };
        set.intersect(&self.component.set())
    }

    /// Least `n` whose element excludes `z`.
    pub fn avoid_index(&self, z: &Rational) -> Result<u64> {
        if !self.component.contains(z) {
            return Err(Error::PointOutsideComponent { point: z.to_string(), component: self.component.to_string() });
        }
        let o = self.oriented();
        let z = if o.mirrored { -z } else { z.clone() };
        o.first_index_past(&z, true)
    }

    /// Least `n` with `element(n) ⊆ set`, or `None` when `set` contains no
    /// element of the filter at all. Decided structurally: the part of `set`
    /// inside the component must have a last piece reaching the escape end.
    pub fn least_index_within(&self, set: &IntervalSet) -> Option<u64> {
        let o = self.oriented();
        let local = self.oriented_set(&set.intersect(&self.component.set()));
        let last = local.pieces().last()?;
        let reaches = match &o.end {
            None => last.hi().value == Value::PosInf,
            Some(b) => last.hi().finite() == Some(b),
        };
        if !reaches {
            return None;
        }
        match last.lo().finite() {
            None => Some(0),
            Some(c) => o.first_index_past(c, !last.lo().included).ok(),
        }
    }

    pub fn label(&self) -> String {
        self.component.label()
    }
}

impl fmt::Display for EscapeFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "filter {} component={} direction={} anchor={}",
            self.label(),
            self.component,
            self.direction,
            self.anchor
        )
    }
}

impl Direction {
    pub fn points_right(&self) -> bool {
        matches!(self, Direction::TowardPosInf | Direction::TowardOpenRight(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::space::Space;

    fn filter(text: &str) -> EscapeFilter {
        let c = Space::parse(text).unwrap().components().remove(0);
        EscapeFilter::choose(&c).unwrap()
    }

    fn s(text: &str) -> IntervalSet {
        text.parse().unwrap()
    }

    #[test]
    fn choose_prefers_right_end() {
        let d = filter("(0,1)");
        assert_eq!((d.direction.clone(), d.anchor.clone()), (Direction::TowardOpenRight(int(1)), q(1, 2)));
        let d = filter("[5,inf)");
        assert_eq!((d.direction.clone(), d.anchor.clone()), (Direction::TowardPosInf, int(6)));
        let d = filter("(-inf,0)");
        assert_eq!((d.direction.clone(), d.anchor.clone()), (Direction::TowardOpenRight(int(0)), int(-1)));
        let d = filter("(0,1]");
        assert_eq!((d.direction.clone(), d.anchor.clone()), (Direction::TowardOpenLeft(int(0)), q(1, 2)));
        let d = filter("(-inf,3]");
        assert_eq!((d.direction.clone(), d.anchor.clone()), (Direction::TowardNegInf, int(2)));
        let d = filter("(-inf,inf)");
        assert_eq!((d.direction.clone(), d.anchor.clone()), (Direction::TowardPosInf, int(0)));
    }

    #[test]
    fn choose_rejects_compact() {
        let c = Space::parse("[0,0]").unwrap().components().remove(0);
        assert!(matches!(EscapeFilter::choose(&c), Err(Error::CompactComponent(_))));
    }

    #[test]
    fn element_formula_instances() {
        assert_eq!(filter("[5,inf)").element(3), s("[9,inf)"));
        let d = filter("(0,1)");
        assert_eq!(d.element(0), s("[1/2,1)"));
        assert_eq!(d.element(2), s("[7/8,1)"));
        let d = filter("(0,1]");
        assert_eq!(d.element(0), s("(0,1/2]"));
        assert_eq!(d.element(3), s("(0,1/16]"));
        assert_eq!(filter("(-inf,3]").element(4), s("(-inf,-2]"));
    }

    #[test]
    fn avoid_index_examples() {
        let d = filter("[5,inf)");
        assert_eq!(d.avoid_index(&int(20)).unwrap(), 15);
        assert_eq!(d.avoid_index(&int(6)).unwrap(), 1);
        assert_eq!(d.avoid_index(&int(5)).unwrap(), 0);
        let d = filter("(0,1)");
        assert_eq!(d.avoid_index(&q(1, 4)).unwrap(), 0);
        assert_eq!(d.avoid_index(&q(1, 2)).unwrap(), 1);
        assert_eq!(d.avoid_index(&q(7, 8)).unwrap(), 3);
        assert!(matches!(d.avoid_index(&int(2)), Err(Error::PointOutsideComponent { .. })));
    }

    #[test]
    fn least_index_within_examples() {
        let d = filter("(0,1)");
        assert_eq!(d.least_index_within(&s("(1/2,1)")), Some(1));
        assert_eq!(d.least_index_within(&s("[1/2,1)")), Some(0));
        assert_eq!(d.least_index_within(&s("(3/4,1) U [5,6]")), Some(2));
        assert_eq!(d.least_index_within(&s("(0,3/4)")), None);
        let d = filter("[5,inf)");
        assert_eq!(d.least_index_within(&s("(7,inf)")), Some(2));
        assert_eq!(d.least_index_within(&s("[7,inf)")), Some(1));
        assert_eq!(d.least_index_within(&s("(-inf,inf)")), Some(0));
        let d = filter("(0,1]");
        assert_eq!(d.least_index_within(&s("(0,1/4)")), Some(2));
    }

    #[test]
    fn open_tail_contains_element() {
        for text in ["(0,1)", "[5,inf)", "(-inf,0]", "(0,1]", "(-inf,inf)"] {
            let d = filter(text);
            for n in 0..10 {
                let tail = d.open_tail(n);
                assert!(d.element(n).is_subset(&tail));
                assert!(tail.is_open_in(&d.component.set()).unwrap());
            }
        }
    }
}
