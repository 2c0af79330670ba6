//! Text grammar for interval sets.
//!
//! ```text
//! SET      := INTERVAL (" U " INTERVAL)* | "{}"
//! INTERVAL := ("(" | "[") EP "," EP (")" | "]")
//! EP       := "-inf" | "inf" | INT | INT "/" POSINT
//! ```

use std::str::FromStr;

use num::{BigInt, Signed};

use super::interval::{Endpoint, Interval, Rational, Value};
use super::set::IntervalSet;
use crate::error::{Error, Result};

fn parse_int(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad integer `{s}`")));
    }
    s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if !den.is_positive() {
                return Err(Error::Parse(format!("denominator must be positive in `{s}`")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

fn parse_value(s: &str) -> Result<Value> {
    match s.trim() {
        "-inf" => Ok(Value::NegInf),
        "inf" => Ok(Value::PosInf),
        other => parse_rational(other).map(Value::Finite),
    }
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad interval `{s}`"));
        let lo_included = match s.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let hi_included = match s.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        if s.len() < 2 {
            return Err(bad());
        }
        let (lo, hi) = s[1..s.len() - 1].split_once(',').ok_or_else(bad)?;
        Interval::new(
            Endpoint { value: parse_value(lo)?, included: lo_included },
            Endpoint { value: parse_value(hi)?, included: hi_included },
        )
    }
}

impl FromStr for IntervalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "{}" || s == "∅" {
            return Ok(IntervalSet::empty());
        }
        let pieces = s.split('U').map(str::parse).collect::<Result<Vec<Interval>>>()?;
        Ok(IntervalSet::normalize(pieces))
    }
}
