use onepoint::finite::{
    enumerate_by_families, enumerate_by_preorders, enumerate_topologies, search_one_point_connectifications, Axiom,
    FiniteSpace, Preorder,
};
use onepoint::Error;

#[test]
fn counts_from_both_enumerators() {
    let expected = [1, 1, 4, 29, 355];
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(enumerate_by_families(n).unwrap().len(), count, "families n={n}");
        assert_eq!(enumerate_by_preorders(n).unwrap().len(), count, "preorders n={n}");
        assert_eq!(enumerate_topologies(n).unwrap().count(), count);
    }
}

#[test]
fn counts_beyond_the_family_filter() {
    let e = enumerate_topologies(6).unwrap();
    assert_eq!(e.count(), 209527);
    assert!(!e.cross_checked);
    assert_eq!(enumerate_topologies(5).unwrap().count(), 6942);
    assert_eq!(enumerate_topologies(7).unwrap_err(), Error::SizeTooLarge { size: 7, limit: 6 });
}

#[test]
fn preorder_round_trip() {
    for n in 0..=4 {
        for t in enumerate_by_families(n).unwrap() {
            let p = Preorder::from_topology(&t);
            assert_eq!(p.to_topology(), t);
            assert_eq!(Preorder::from_topology(&p.to_topology()), p);
        }
    }
}

#[test]
fn every_finite_space_is_locally_connected() {
    for n in 0..=4 {
        for t in enumerate_by_families(n).unwrap() {
            assert!(t.check_axiom(Axiom::LocallyConnected), "{t}");
            assert_eq!(t.components_by_scan(), t.components_by_growth(), "{t}");
        }
    }
}

#[test]
fn separation_axioms_nest() {
    for t in enumerate_by_preorders(4).unwrap() {
        if t.check_axiom(Axiom::T2) {
            assert!(t.check_axiom(Axiom::T1));
        }
        if t.check_axiom(Axiom::T1) {
            assert!(t.check_axiom(Axiom::T0));
            // finite T1 spaces are discrete
            assert_eq!(t, FiniteSpace::discrete(4));
        }
    }
}

#[test]
fn t1_spaces_have_no_hausdorff_connectification() {
    for n in 1..=4 {
        for t in enumerate_by_preorders(n).unwrap().into_iter().filter(|t| t.check_axiom(Axiom::T1)) {
            assert!(search_one_point_connectifications(&t, Axiom::T2).unwrap().is_empty(), "{t}");
        }
    }
}

#[test]
fn search_examples() {
    assert!(search_one_point_connectifications(&FiniteSpace::discrete(1), Axiom::T2).unwrap().is_empty());
    assert!(search_one_point_connectifications(&FiniteSpace::discrete(2), Axiom::T2).unwrap().is_empty());
    let found = search_one_point_connectifications(&FiniteSpace::sierpinski(), Axiom::T0).unwrap();
    assert!(!found.is_empty());
    for y in &found {
        assert_eq!(y.subspace(0b011), FiniteSpace::sierpinski());
        assert!(y.is_dense(0b011) && y.check_axiom(Axiom::Connected) && y.check_axiom(Axiom::T0));
    }
}

#[test]
fn dump_is_stable() {
    let lines: Vec<String> = enumerate_topologies(2).unwrap().topologies.iter().map(|t| t.to_string()).collect();
    assert_eq!(lines, ["{},{0,1}", "{},{0},{0,1}", "{},{1},{0,1}", "{},{0},{1},{0,1}"]);
    for line in &lines {
        assert_eq!(&line.parse::<FiniteSpace>().unwrap().to_string(), line);
    }
}
