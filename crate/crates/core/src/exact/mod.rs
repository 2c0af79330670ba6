//! Exact finite unions of intervals on the extended real line, with the
//! subspace topology operators used everywhere else.

mod interval;
mod parse;
mod set;

pub use interval::{Endpoint, Interval, Rational, Value};
pub use parse::parse_rational;
pub use set::IntervalSet;

/// `num/den` as a [`Rational`].
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// An integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
