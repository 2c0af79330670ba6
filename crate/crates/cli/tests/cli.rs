use std::process::{Command, Output};

use onepoint::connectify::{ExtClosedSet, ExtPoint};
use onepoint::finite::{Axiom, FiniteSpace};
use onepoint::report::{self, Format};
use onepoint::space::Space;
use onepoint::suite::SuiteConfig;

fn onepoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onepoint")).args(args).output().expect("run onepoint")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn sp(text: &str) -> Space {
    Space::parse(text).unwrap()
}

#[test]
fn refusal_exits_with_three() {
    let out = onepoint(&["connectify", "(0,1) U [2,3]"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).starts_with("Refused component=[2,3]\n"));
    let out = onepoint(&["compactify", "[0,1]"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn connectifiable_space() {
    let out = onepoint(&["--format", "records", "connectify", "(0,1) U [5,inf)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("Connectifiable filters=2"));
    assert_eq!(text.lines().filter(|l| l.starts_with("filter ")).count(), 2);
}

#[test]
fn enumerate_prints_count() {
    let out = onepoint(&["finite", "enumerate", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("count=29"));
    assert_eq!(onepoint(&["finite", "enumerate", "7"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_with_two() {
    for args in [
        &["connectify", "(0,1"][..],
        &["components", "[2,1]"],
        &["witness", "hausdorff", "(0,1)", "q", "1/2"],
        &["witness", "hausdorff", "(0,1)", "p", "p"],
        &["witness", "normal", "(0,1)", "p", "p+(0,1/2]"],
        &["finite", "search", "{},{0},{1}", "T0"],
        &["finite", "search", "{},{0},{0,1}", "T9"],
        &["frobnicate"],
    ] {
        let out = onepoint(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn negative_points_are_accepted() {
    let out = onepoint(&["witness", "hausdorff", "(-inf,0)", "-1", "p"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

/// The binary prints exactly what the library renders.
#[test]
fn cli_is_a_thin_wrapper() {
    let cases: Vec<(Vec<&str>, report::Report)> = vec![
        (vec!["components", "(0,1) U [2,3]"], report::components(&sp("(0,1) U [2,3]"), Format::Text)),
        (vec!["--format", "records", "check", "[0,1) U (1,2]"], report::check(&sp("[0,1) U (1,2]"), Format::Records)),
        (vec!["connectify", "(-inf,0) U (0,1]"], report::connectify(&sp("(-inf,0) U (0,1]"), Format::Text)),
        (
            vec!["--format", "records", "witness", "hausdorff", "[5,inf)", "p", "20"],
            report::witness_hausdorff(&sp("[5,inf)"), &ExtPoint::Extra, &"20".parse().unwrap(), Format::Records)
                .unwrap(),
        ),
        (
            vec!["--format", "records", "witness", "normal", "(0,1) U [5,inf)", "p+[6,inf)", "[1/4,1/2]"],
            report::witness_normal(
                &sp("(0,1) U [5,inf)"),
                &ExtClosedSet::parse("p+[6,inf)").unwrap(),
                &ExtClosedSet::parse("[1/4,1/2]").unwrap(),
                Format::Records,
            )
            .unwrap(),
        ),
        (vec!["compactify", "(0,1) U [2,3]"], report::compactification(&sp("(0,1) U [2,3]"), Format::Text).unwrap()),
        (vec!["--format", "records", "finite", "enumerate", "2"], report::finite_enumerate(2, Format::Records).unwrap()),
        (
            vec!["finite", "search", "{},{0},{0,1}", "T0"],
            report::finite_search(&FiniteSpace::sierpinski(), Axiom::T0, Format::Text).unwrap(),
        ),
        (vec!["--format", "records", "selftest"], report::selftest(&SuiteConfig::quick(), Format::Records)),
    ];
    for (args, expected) in cases {
        let out = onepoint(&args);
        assert_eq!(stdout(&out), expected.body, "{args:?}");
        assert_eq!(out.status.code(), Some(expected.status.exit_code()), "{args:?}");
    }
}

#[test]
fn search_reports_hausdorff_failure() {
    let out = onepoint(&["--format", "records", "finite", "search", "{},{0},{1},{0,1}", "T2"]);
    assert_eq!(stdout(&out), "count=0\n");
    let out = onepoint(&["finite", "search", "{},{0},{0,1}", "T0"]);
    assert!(stdout(&out).contains("count=3"));
}
