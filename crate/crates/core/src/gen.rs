//! Seeded random generators for spaces, points and sets.
//!
//! Every generator takes the RNG explicitly so callers control determinism.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::compactify::{CompactExtension, CompactOpenSet};
use crate::connectify::{ExtClosedSet, ExtOpenSet, ExtPoint, Extension};
use crate::exact::{int, q, Endpoint, Interval, IntervalSet, Rational, Value};
use crate::space::{Component, Space};

const DENOMINATORS: [i64; 5] = [1, 2, 3, 4, 8];

/// A rational in `[lo, hi]` with a small denominator.
pub fn rational_between<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational) -> Rational {
    let den = *DENOMINATORS.choose(rng).unwrap();
    let t = q(rng.gen_range(0..=den), den);
    lo + (hi - lo) * t
}

/// A random space with `1..=max_components` pieces. With `allow_compact`
/// false, no piece is closed and bounded.
pub fn space<R: Rng>(rng: &mut R, max_components: usize, allow_compact: bool) -> Space {
    let k = rng.gen_range(1..=max_components);
    let mut x = int(rng.gen_range(-8..=0));
    let mut raw = Vec::with_capacity(k);
    for i in 0..k {
        let first = i == 0;
        let last = i + 1 == k;
        if allow_compact && rng.gen_bool(0.15) {
            raw.push(Interval::point(x.clone()));
            x += int(rng.gen_range(1..=2));
            continue;
        }
        let len = q(rng.gen_range(1..=12), *[1, 2, 4].choose(rng).unwrap());
        let lo = if first && rng.gen_bool(0.2) {
            Endpoint::neg_inf()
        } else {
            Endpoint { value: Value::Finite(x.clone()), included: rng.gen_bool(0.5) }
        };
        let right = &x + &len;
        let mut hi = if last && rng.gen_bool(0.25) {
            Endpoint::pos_inf()
        } else {
            Endpoint { value: Value::Finite(right.clone()), included: rng.gen_bool(0.5) }
        };
        if !allow_compact && lo.included && hi.included {
            hi.included = false;
        }
        raw.push(Interval::new(lo, hi).expect("positive length"));
        // a zero gap leaves a single missing point between open ends
        let gap = if rng.gen_bool(0.2) { int(0) } else { q(rng.gen_range(1..=6), 2) };
        x = right + gap;
    }
    // abutting pieces are kept apart by opening both facing ends
    for i in 1..raw.len() {
        if raw[i - 1].hi().value == raw[i].lo().value {
            let prev = &raw[i - 1];
            let cur = &raw[i];
            let prev_lo = prev.lo().clone();
            let prev_hi = Endpoint { value: prev.hi().value.clone(), included: false };
            let cur_lo = Endpoint { value: cur.lo().value.clone(), included: false };
            let cur_hi = cur.hi().clone();
            if let (Ok(a), Ok(b)) = (Interval::new(prev_lo, prev_hi), Interval::new(cur_lo, cur_hi)) {
                raw[i - 1] = a;
                raw[i] = b;
            }
        }
    }
    Space::new(IntervalSet::normalize(raw)).expect("at least one piece")
}

/// Fixed spaces exercising the corner cases, followed by random ones.
pub fn corpus<R: Rng>(rng: &mut R, count: usize) -> Vec<Space> {
    let fixed = [
        "(0,1)",
        "[5,inf)",
        "(-inf,0)",
        "(-inf,inf)",
        "(0,1]",
        "(-inf,3]",
        "(0,1) U (1,2)",
        "(0,1) U (2,3) U [5,inf)",
        "(-inf,-2] U (0,1) U [3,4)",
        "[0,1]",
        "[0,0]",
        "(0,1) U [2,3]",
        "[0,0] U (1,2)",
        "[0,1) U (1,2]",
    ];
    let mut out: Vec<Space> = fixed.iter().map(|t| Space::parse(t).unwrap()).collect();
    while out.len() < count {
        let allow_compact = out.len().is_multiple_of(2);
        out.push(space(rng, 5, allow_compact));
    }
    out.truncate(count.max(fixed.len()));
    out
}

/// A point of the component, biased toward its ends.
pub fn point_in<R: Rng>(rng: &mut R, c: &Component) -> Rational {
    let piece = &c.piece;
    if piece.is_degenerate() {
        return piece.lo().finite().unwrap().clone();
    }
    let mid = piece.interior_point();
    let lo = piece.lo().finite().cloned().unwrap_or_else(|| &mid - int(20));
    let hi = piece.hi().finite().cloned().unwrap_or_else(|| &mid + int(20));
    let candidate = match rng.gen_range(0..5) {
        0 => mid,
        1 => {
            // close to the right end
            let k = rng.gen_range(1..40u32);
            &hi - (&hi - &lo) / Rational::from_integer(num::BigInt::from(2).pow(k))
        }
        2 => {
            let k = rng.gen_range(1..40u32);
            &lo + (&hi - &lo) / Rational::from_integer(num::BigInt::from(2).pow(k))
        }
        3 if piece.lo().included => lo,
        3 if piece.hi().included => hi,
        _ => rational_between(rng, &lo, &hi),
    };
    if piece.contains(&candidate) { candidate } else { piece.interior_point() }
}

pub fn point_in_space<R: Rng>(rng: &mut R, x: &Space) -> Rational {
    let cs = x.components();
    let c = &cs[rng.gen_range(0..cs.len())];
    point_in(rng, c)
}

fn span(x: &IntervalSet) -> (Rational, Rational) {
    let (lo, hi) = x.finite_span().unwrap_or((int(0), int(0)));
    (lo - int(2), hi + int(2))
}

/// A random open subset of `X`: a few open intervals, rays and whole
/// components, traced on `X`.
pub fn open_in<R: Rng>(rng: &mut R, x: &Space) -> IntervalSet {
    let (lo, hi) = span(x.ambient());
    let mut raw = Vec::new();
    for _ in 0..rng.gen_range(0..4) {
        let a = rational_between(rng, &lo, &hi);
        let b = rational_between(rng, &lo, &hi);
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let piece = match rng.gen_range(0..6) {
            0 => Interval::below(b),
            1 => Interval::above(a),
            _ => match Interval::open(a, b) {
                Ok(p) => p,
                Err(_) => continue,
            },
        };
        raw.push(piece);
    }
    let mut set = IntervalSet::normalize(raw).intersect(x.ambient());
    for c in x.components() {
        if rng.gen_bool(0.15) {
            set = set.union(&c.set());
        }
    }
    set
}

pub fn closed_in<R: Rng>(rng: &mut R, x: &Space) -> IntervalSet {
    x.ambient().difference(&open_in(rng, x))
}

/// A random valid open set of `Y`. Neighbourhoods of `p` get a random
/// filter element (index `<= max_tail`) in every component.
pub fn ext_open<R: Rng>(rng: &mut R, y: &Extension, with_extra: bool, max_tail: u64) -> ExtOpenSet {
    let mut trace = open_in(rng, y.base());
    if !with_extra {
        return ExtOpenSet::TypeI { trace };
    }
    let mut tails = Vec::with_capacity(y.filters().len());
    for d in y.filters() {
        let n = rng.gen_range(0..=max_tail);
        trace = trace.union(&d.open_tail(n));
        tails.push(n);
    }
    ExtOpenSet::TypeII { trace, tails }
}

/// A random open cover of the compactification: one neighbourhood of `∞`
/// and a chain of overlapping open intervals over its compact remainder,
/// mixed with a few unneeded opens.
pub fn compact_cover<R: Rng>(rng: &mut R, y: &CompactExtension) -> Vec<CompactOpenSet> {
    let x = y.base();
    let mut compact = IntervalSet::empty();
    for _ in 0..rng.gen_range(1..=3) {
        let z = point_in_space(rng, x);
        compact = compact.union(&y.compact_neighbourhood(&z).expect("point of X"));
    }
    let mut cover = vec![CompactOpenSet::TypeInf { compact: compact.clone() }];
    for piece in compact.pieces() {
        let hi = piece.hi().finite().expect("compact piece").clone();
        let mut t = piece.lo().finite().expect("compact piece").clone();
        loop {
            let next = &t + q(rng.gen_range(1..=8), 8);
            let link = Interval::open(&t - q(1, 16), next.clone()).expect("positive length");
            cover.push(CompactOpenSet::TypeI { trace: IntervalSet::from(link).intersect(x.ambient()) });
            if next > hi {
                break;
            }
            t = next;
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        cover.push(CompactOpenSet::TypeI { trace: open_in(rng, x) });
    }
    cover.shuffle(rng);
    cover
}

/// Open interval neighbourhood of a closed set, widened by `eps` on each side.
fn widen(set: &IntervalSet, eps: &Rational) -> IntervalSet {
    IntervalSet::normalize(
        set.pieces()
            .iter()
            .map(|p| {
                let push = |e: &Endpoint, delta: Rational| match &e.value {
                    Value::Finite(v) => Endpoint::open(v + delta),
                    _ => e.clone(),
                };
                Interval::new(push(p.lo(), -eps.clone()), push(p.hi(), eps.clone())).expect("widened interval")
            })
            .collect(),
    )
}

/// A random pair of disjoint closed sets of `Y`, not both holding `p`.
pub fn disjoint_closed_pair<R: Rng>(rng: &mut R, y: &Extension) -> (ExtClosedSet, ExtClosedSet) {
    let x = y.base();
    let f_has_p = rng.gen_bool(0.5);
    let f = if f_has_p && rng.gen_bool(0.2) {
        ExtClosedSet::extra()
    } else {
        ext_open(rng, y, !f_has_p, 16).complement(x.ambient())
    };
    let eps = q(1, 1 << rng.gen_range(1..6));
    let around_f = widen(&f.trace, &eps).intersect(x.ambient());
    let g_has_p = !f.contains_extra && rng.gen_bool(0.4);
    let extra = ext_open(rng, y, !g_has_p, 16);
    let opener = ExtOpenSet::union_all([&extra, &ExtOpenSet::TypeI { trace: around_f }]);
    let g = opener.complement(x.ambient());
    (f, g)
}

/// A random pair of distinct points of `Y`.
pub fn point_pair<R: Rng>(rng: &mut R, y: &Extension) -> (ExtPoint, ExtPoint) {
    loop {
        let mut pick = || {
            if rng.gen_bool(0.3) {
                ExtPoint::Extra
            } else {
                ExtPoint::Base(point_in_space(rng, y.base()))
            }
        };
        let (a, b) = (pick(), pick());
        if a != b {
            return (a, b);
        }
    }
}

/// Candidate clopen sets: components, unions of components, neighbourhoods
/// of `p`, and their complements, plus random opens.
pub fn clopen_candidates<R: Rng>(rng: &mut R, y: &Extension, count: usize) -> Vec<ExtOpenSet> {
    let x = y.base();
    let mut out = vec![ExtOpenSet::empty(), y.whole(), ExtOpenSet::TypeI { trace: x.ambient().clone() }];
    let cs: Vec<Component> = x.components();
    for c in &cs {
        out.push(ExtOpenSet::TypeI { trace: c.set() });
        if let Ok(n) = y.neighbourhood(x.ambient().difference(&c.set())) {
            out.push(n);
        }
        out.push(ExtOpenSet::TypeII { trace: x.ambient().difference(&c.set()), tails: vec![0; cs.len()] });
    }
    while out.len() < count {
        let candidate = match rng.gen_range(0..3) {
            0 => {
                let trace = cs
                    .iter()
                    .filter(|_| rng.gen_bool(0.5))
                    .fold(IntervalSet::empty(), |acc, c| acc.union(&c.set()));
                if rng.gen_bool(0.5) {
                    ExtOpenSet::TypeI { trace }
                } else {
                    ExtOpenSet::TypeII { trace, tails: vec![0; cs.len()] }
                }
            }
            1 => ext_open(rng, y, false, 0),
            _ => ext_open(rng, y, true, 32),
        };
        out.push(candidate);
    }
    out.truncate(count);
    out
}
