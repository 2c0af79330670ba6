use std::cmp::Ordering;
use std::fmt;

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A point of the extended real line.
///
/// The derived ordering is the natural one: `NegInf < Finite(_) < PosInf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Value {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Value::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::NegInf => Value::PosInf,
            Value::PosInf => Value::NegInf,
            Value::Finite(q) => Value::Finite(-q),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::NegInf => f.write_str("-inf"),
            Value::PosInf => f.write_str("inf"),
            Value::Finite(q) => write!(f, "{q}"),
        }
    }
}

/// One end of an interval. Infinite ends are never included.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub value: Value,
    pub included: bool,
}

impl Endpoint {
    pub fn closed(q: Rational) -> Self {
        Endpoint { value: Value::Finite(q), included: true }
    }

    pub fn open(q: Rational) -> Self {
        Endpoint { value: Value::Finite(q), included: false }
    }

    pub fn neg_inf() -> Self {
        Endpoint { value: Value::NegInf, included: false }
    }

    pub fn pos_inf() -> Self {
        Endpoint { value: Value::PosInf, included: false }
    }

    pub fn finite(&self) -> Option<&Rational> {
        self.value.finite()
    }

    fn flipped(&self) -> Endpoint {
        Endpoint { value: self.value.clone(), included: !self.included }
    }

    /// Order as left ends: a closed start precedes an open start at the same value.
    pub fn cmp_as_lower(&self, other: &Endpoint) -> Ordering {
        self.value.cmp(&other.value).then(other.included.cmp(&self.included))
    }

    /// Order as right ends: a closed end follows an open end at the same value.
    pub fn cmp_as_upper(&self, other: &Endpoint) -> Ordering {
        self.value.cmp(&other.value).then(self.included.cmp(&other.included))
    }
}

/// A nonempty interval of the extended real line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Endpoint,
    hi: Endpoint,
}

fn spans(lo: &Endpoint, hi: &Endpoint) -> bool {
    match lo.value.cmp(&hi.value) {
        Ordering::Less => true,
        Ordering::Equal => lo.included && hi.included,
        Ordering::Greater => false,
    }
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Result<Self> {
        let bad = |why: &str| Err(Error::MalformedInterval(format!("{why}: lo={}, hi={}", lo.value, hi.value)));
        if lo.value == Value::PosInf || hi.value == Value::NegInf {
            return bad("infinite end on the wrong side");
        }
        if (!lo.value.is_finite() && lo.included) || (!hi.value.is_finite() && hi.included) {
            return bad("infinite end cannot be included");
        }
        if !spans(&lo, &hi) {
            return bad("empty interval");
        }
        Ok(Interval { lo, hi })
    }

    pub fn open(a: Rational, b: Rational) -> Result<Self> {
        Interval::new(Endpoint::open(a), Endpoint::open(b))
    }

    pub fn closed(a: Rational, b: Rational) -> Result<Self> {
        Interval::new(Endpoint::closed(a), Endpoint::closed(b))
    }

    pub fn point(a: Rational) -> Self {
        Interval { lo: Endpoint::closed(a.clone()), hi: Endpoint::closed(a) }
    }

    pub fn real_line() -> Self {
        Interval { lo: Endpoint::neg_inf(), hi: Endpoint::pos_inf() }
    }

    /// `(a, inf)`
    pub fn above(a: Rational) -> Self {
        Interval { lo: Endpoint::open(a), hi: Endpoint::pos_inf() }
    }

    /// `(-inf, b)`
    pub fn below(b: Rational) -> Self {
        Interval { lo: Endpoint::neg_inf(), hi: Endpoint::open(b) }
    }

    pub fn lo(&self) -> &Endpoint {
        &self.lo
    }

    pub fn hi(&self) -> &Endpoint {
        &self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo.value == self.hi.value
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.value.is_finite() && self.hi.value.is_finite()
    }

    /// Closed and bounded (Heine–Borel).
    pub fn is_compact(&self) -> bool {
        self.is_bounded() && self.lo.included && self.hi.included
    }

    pub fn contains(&self, q: &Rational) -> bool {
        let v = Value::Finite(q.clone());
        let above = match self.lo.value.cmp(&v) {
            Ordering::Less => true,
            Ordering::Equal => self.lo.included,
            Ordering::Greater => false,
        };
        let below = match v.cmp(&self.hi.value) {
            Ordering::Less => true,
            Ordering::Equal => self.hi.included,
            Ordering::Greater => false,
        };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo.cmp_as_lower(&other.lo) == Ordering::Less { &other.lo } else { &self.lo };
        let hi = if self.hi.cmp_as_upper(&other.hi) == Ordering::Greater { &other.hi } else { &self.hi };
        spans(lo, hi).then(|| Interval { lo: lo.clone(), hi: hi.clone() })
    }

    /// Closure in the real line: every finite end becomes included.
    pub fn real_closure(&self) -> Interval {
        let close = |e: &Endpoint| Endpoint { value: e.value.clone(), included: e.value.is_finite() };
        Interval { lo: close(&self.lo), hi: close(&self.hi) }
    }

    /// A deterministic rational point strictly inside (or the point itself
    /// for a degenerate interval): the midpoint when bounded, one unit in from
    /// a single finite end, and 0 for the whole line.
    pub fn interior_point(&self) -> Rational {
        match (&self.lo.value, &self.hi.value) {
            (Value::Finite(a), Value::Finite(b)) => (a + b) / Rational::from_integer(2.into()),
            (Value::Finite(a), _) => a + Rational::one(),
            (_, Value::Finite(b)) => b - Rational::one(),
            _ => Rational::zero(),
        }
    }

    /// The same interval reflected through 0.
    pub fn reflect(&self) -> Interval {
        let r = |e: &Endpoint| Endpoint { value: e.value.neg(), included: e.included };
        Interval { lo: r(&self.hi), hi: r(&self.lo) }
    }

    /// Whether `self ∪ next` is a single interval, given `self` starts no later.
    fn merges_with(&self, next: &Interval) -> bool {
        match next.lo.value.cmp(&self.hi.value) {
            Ordering::Less => true,
            Ordering::Equal => self.hi.included || next.lo.included,
            Ordering::Greater => false,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo.included { '[' } else { '(' };
        let close = if self.hi.included { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo.value, self.hi.value)
    }
}

/// Complement of a canonical, sorted piece list within the real line.
pub(super) fn gaps(pieces: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::with_capacity(pieces.len() + 1);
    let mut left = Endpoint::neg_inf();
    for piece in pieces {
        let right = piece.lo.flipped();
        if spans(&left, &right) && left.value != Value::PosInf && right.value != Value::NegInf {
            out.push(Interval { lo: left, hi: right });
        }
        left = piece.hi.flipped();
    }
    let right = Endpoint::pos_inf();
    if left.value != Value::PosInf && spans(&left, &right) {
        out.push(Interval { lo: left, hi: right });
    }
    out
}

/// Canonical union of arbitrary valid intervals.
pub(super) fn merge(mut raw: Vec<Interval>) -> Vec<Interval> {
    raw.sort_by(|a, b| a.lo.cmp_as_lower(&b.lo).then_with(|| a.hi.cmp_as_upper(&b.hi)));
    let mut out: Vec<Interval> = Vec::with_capacity(raw.len());
    for piece in raw {
        match out.last_mut() {
            Some(cur) if cur.merges_with(&piece) => {
                if piece.hi.cmp_as_upper(&cur.hi) == Ordering::Greater {
                    cur.hi = piece.hi;
                }
            }
            _ => out.push(piece),
        }
    }
    out
}
