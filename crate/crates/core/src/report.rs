//! Text and record renderings of every command-line verb.
//!
//! Records are line-oriented `tag key=value ...` lines with sets in the
//! interval grammar; they depend on nothing but the inputs.

use std::fmt::Write;

use crate::compactify::{compactify, CompactVerdict};
use crate::connectify::{check_connectifiable, ExtClosedSet, ExtPoint, Verdict};
use crate::error::Error;
use crate::finite::{enumerate_topologies, search_one_point_connectifications, Axiom, FiniteSpace};
use crate::space::Space;
use crate::suite::{self, SuiteConfig};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Refused,
    /// An internal check failed.
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Refused => 3,
            Status::Failed => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub status: Status,
    pub body: String,
}

impl Report {
    fn new(status: Status, body: String) -> Self {
        Report { status, body }
    }
}

/// 2 for bad input, 3 for a refusal, 1 for a broken invariant.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CompactComponent(_) => 3,
        Error::InvalidExtension(_)
        | Error::DensityFailure(_)
        | Error::FidelityFailure(_)
        | Error::EnumeratorDisagreement(_) => 1,
        _ => 2,
    }
}

macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("write to string")
    };
}

fn refused(out: &mut String, format: Format, component: &impl std::fmt::Display) {
    emit!(out, "Refused component={component}");
    if format == Format::Text {
        emit!(out, "the compact component {component} is clopen in X, so no one-point extension is both Hausdorff and connected");
    }
}

pub fn components(x: &Space, format: Format) -> Report {
    let mut out = String::new();
    let cs = x.components();
    match format {
        Format::Text => {
            emit!(out, "X = {x}");
            emit!(out, "{} component(s)", cs.len());
            for c in &cs {
                let kind = if c.is_compact() { "compact" } else { "non-compact" };
                emit!(out, "  {} {} {kind}", c.label(), c);
            }
        }
        Format::Records => {
            emit!(out, "space={x} components={}", cs.len());
            for c in &cs {
                emit!(out, "component {} piece={c} compact={}", c.label(), c.is_compact());
            }
        }
    }
    Report::new(Status::Ok, out)
}

pub fn check(x: &Space, format: Format) -> Report {
    let mut out = String::new();
    let lc = x.local_connectedness_certificate();
    let lc_ok = lc.verify(x);
    let compact_component = x.has_compact_component();
    match format {
        Format::Text => {
            emit!(out, "X = {x}");
            emit!(out, "compact: {}", if x.is_compact() { "yes" } else { "no" });
            emit!(out, "locally connected: {}", if lc_ok { "yes" } else { "NO" });
            for (c, window) in &lc.windows {
                let kind = if c.is_compact() { "compact" } else { "non-compact" };
                emit!(out, "  {} {c} {kind}, open window {window}", c.label());
            }
            match &compact_component {
                Some(c) => emit!(out, "first compact component: {c}"),
                None => emit!(out, "no compact component"),
            }
        }
        Format::Records => {
            emit!(out, "space={x} compact={} locally_connected={lc_ok}", x.is_compact());
            for (c, window) in &lc.windows {
                emit!(out, "component {} piece={c} compact={} window={window}", c.label(), c.is_compact());
            }
            match &compact_component {
                Some(c) => emit!(out, "compact_component {} piece={c}", c.label()),
                None => emit!(out, "compact_component none"),
            }
        }
    }
    Report::new(if lc_ok { Status::Ok } else { Status::Failed }, out)
}

pub fn connectify(x: &Space, format: Format) -> Report {
    let mut out = String::new();
    let y = match check_connectifiable(x) {
        Verdict::Refused { component } => {
            refused(&mut out, format, &component);
            return Report::new(Status::Refused, out);
        }
        Verdict::Connectifiable(y) => y,
    };
    emit!(out, "Connectifiable filters={}", y.filters().len());
    for d in y.filters() {
        match format {
            Format::Text => {
                emit!(out, "  {} {} escapes toward {} from {}", d.label(), d.component, d.direction, d.anchor);
                emit!(out, "    elements {}, {}, {}, ...", d.element(0), d.element(1), d.element(2));
            }
            Format::Records => emit!(out, "{d}"),
        }
    }
    if format == Format::Text {
        emit!(out, "Y = X U {{p}}; a neighbourhood of p holds an element of every filter");
    }
    Report::new(Status::Ok, out)
}

pub fn witness_hausdorff(x: &Space, a: &ExtPoint, b: &ExtPoint, format: Format) -> Result<Report, Error> {
    let mut out = String::new();
    let y = match check_connectifiable(x) {
        Verdict::Refused { component } => {
            refused(&mut out, format, &component);
            return Ok(Report::new(Status::Refused, out));
        }
        Verdict::Connectifiable(y) => y,
    };
    let (u, v) = y.hausdorff_witness(a, b)?;
    let verified = y.verify_point_separation(a, b, &u, &v);
    match format {
        Format::Text => {
            emit!(out, "separating {a} and {b} in Y = ({x}) U {{p}}");
            emit!(out, "  U = {u}");
            emit!(out, "  V = {v}");
        }
        Format::Records => {
            emit!(out, "witness hausdorff y={a} z={b}");
            emit!(out, "U {u}");
            emit!(out, "V {v}");
        }
    }
    Ok(verification(out, format, verified))
}

fn verification(mut out: String, format: Format, verified: Result<(), String>) -> Report {
    let status = if verified.is_ok() { Status::Ok } else { Status::Failed };
    match (format, verified) {
        (Format::Text, Ok(())) => emit!(out, "verified: open, containing, disjoint"),
        (Format::Text, Err(e)) => emit!(out, "VERIFICATION FAILED: {e}"),
        (Format::Records, Ok(())) => emit!(out, "verified=true"),
        (Format::Records, Err(e)) => emit!(out, "verified=false reason={e}"),
    }
    Report::new(status, out)
}

pub fn witness_normal(x: &Space, f: &ExtClosedSet, g: &ExtClosedSet, format: Format) -> Result<Report, Error> {
    let mut out = String::new();
    let y = match check_connectifiable(x) {
        Verdict::Refused { component } => {
            refused(&mut out, format, &component);
            return Ok(Report::new(Status::Refused, out));
        }
        Verdict::Connectifiable(y) => y,
    };
    let sep = y.normality_witness(f, g)?;
    let mut verified = y.verify_set_separation(f, g, &sep);
    let with_p = f.contains_extra || g.contains_extra;
    if with_p && verified.is_ok() && !y.matches_component_shape(&sep) {
        verified = Err("not of the per-component shape".into());
    }
    match format {
        Format::Text => {
            emit!(out, "separating F = {f} and G = {g} in Y = ({x}) U {{p}}");
            emit!(out, "  U = {}", sep.u);
            emit!(out, "  V = {}", sep.v);
            for part in &sep.parts {
                emit!(
                    out,
                    "  C#{}: tail {} element {}; side with p {}, other side {}",
                    part.component,
                    part.tail,
                    part.element,
                    part.with_extra,
                    part.without_extra
                );
            }
        }
        Format::Records => {
            emit!(out, "witness normal F={f} G={g}");
            emit!(out, "U {}", sep.u);
            emit!(out, "V {}", sep.v);
            for part in &sep.parts {
                emit!(
                    out,
                    "part C#{} tail={} element={} with_p={} without_p={}",
                    part.component,
                    part.tail,
                    part.element,
                    part.with_extra,
                    part.without_extra
                );
            }
        }
    }
    Ok(verification(out, format, verified))
}

pub fn compactification(x: &Space, format: Format) -> Result<Report, Error> {
    let mut out = String::new();
    let y = match compactify(x) {
        CompactVerdict::Refused => {
            emit!(out, "Refused space={x}");
            if format == Format::Text {
                emit!(out, "X is already compact, so infinity would be an isolated point");
            }
            return Ok(Report::new(Status::Refused, out));
        }
        CompactVerdict::Compactifiable(y) => y,
    };
    emit!(out, "Compactifiable base={x}");
    let mut failure = None;
    for c in x.components() {
        let z = ExtPoint::Base(c.piece.interior_point());
        let (u, v) = y.hausdorff_witness(&ExtPoint::Extra, &z)?;
        let ok = y.is_open_in_compactification(&u)
            && y.is_open_in_compactification(&v)
            && y.contains(&u, &ExtPoint::Extra)
            && y.contains(&v, &z)
            && u.trace(x).is_disjoint(&v.trace(x));
        if !ok && failure.is_none() {
            failure = Some(format!("witness for {z} does not separate"));
        }
        match format {
            Format::Text => emit!(out, "  {} {c}: infinity vs {z}: U = {u}, V = {v}", c.label()),
            Format::Records => emit!(out, "witness {} z={z} U {u} V {v}", c.label()),
        }
    }
    Ok(verification(out, format, failure.map_or(Ok(()), Err)))
}

pub fn finite_enumerate(size: usize, format: Format) -> Result<Report, Error> {
    let e = enumerate_topologies(size)?;
    let mut out = String::new();
    emit!(out, "count={}", e.count());
    match format {
        Format::Text if e.cross_checked => emit!(out, "family filter and preorder enumeration agree"),
        Format::Text => emit!(out, "by preorder enumeration"),
        Format::Records => {
            for t in &e.topologies {
                emit!(out, "{t}");
            }
        }
    }
    Ok(Report::new(Status::Ok, out))
}

pub fn finite_search(x: &FiniteSpace, axiom: Axiom, format: Format) -> Result<Report, Error> {
    let found = search_one_point_connectifications(x, axiom)?;
    let mut out = String::new();
    if format == Format::Text {
        emit!(out, "X = {x} on {} point(s); extra point labelled {}; axiom {axiom}", x.size(), x.size());
    }
    emit!(out, "count={}", found.len());
    for t in &found {
        emit!(out, "{t}");
    }
    Ok(Report::new(Status::Ok, out))
}

pub fn selftest(cfg: &SuiteConfig, format: Format) -> Report {
    let outcomes = suite::run(cfg);
    let passed = outcomes.iter().all(|o| o.passed());
    let mut out = String::new();
    for o in &outcomes {
        let status = if o.passed() { "pass" } else { "FAIL" };
        match format {
            Format::Text => emit!(out, "{:<26} {status} ({} cases)", o.name, o.cases),
            Format::Records => {
                emit!(out, "check name={} cases={} failures={} status={status}", o.name, o.cases, o.failure_count)
            }
        }
        for message in &o.failures {
            match format {
                Format::Text => emit!(out, "    {message}"),
                Format::Records => emit!(out, "failure name={} message={message}", o.name),
            }
        }
    }
    let status = if passed { "pass" } else { "FAIL" };
    match format {
        Format::Text => emit!(out, "selftest {status}: {} checks", outcomes.len()),
        Format::Records => emit!(out, "selftest checks={} status={status}", outcomes.len()),
    }
    Report::new(if passed { Status::Ok } else { Status::Failed }, out)
}
