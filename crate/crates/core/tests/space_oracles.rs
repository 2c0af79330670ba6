use onepoint::connectify::EscapeFilter;
use onepoint::exact::{IntervalSet, Rational};
use onepoint::gen;
use onepoint::space::Space;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sp(text: &str) -> Space {
    Space::parse(text).unwrap()
}

fn s(text: &str) -> IntervalSet {
    text.parse().unwrap()
}

/// Greedy left-to-right sweep: repeatedly take the member that covers the
/// leftmost uncovered point and reaches furthest right.
fn sweep(target: &IntervalSet, family: &[IntervalSet]) -> Option<Vec<usize>> {
    let mut uncovered = target.clone();
    let mut used = Vec::new();
    while let Some(piece) = uncovered.pieces().first() {
        let x = piece.lo().finite()?.clone();
        if !piece.lo().included {
            return None;
        }
        let (i, _) = family
            .iter()
            .enumerate()
            .filter_map(|(i, f)| f.pieces().iter().find(|p| p.contains(&x)).map(|p| (i, p.hi().clone())))
            .max_by(|a, b| a.1.cmp_as_upper(&b.1))?;
        used.push(i);
        uncovered = uncovered.difference(&family[i]);
    }
    Some(used)
}

/// A finite cover of `X` by relatively open sets: overlapping windows
/// around a grid, traced on `X`.
fn grid_cover(x: &Space, rng: &mut ChaCha8Rng) -> Vec<IntervalSet> {
    let (lo, hi) = x.ambient().finite_span().unwrap();
    let mut family = Vec::new();
    let mut t = lo - Rational::from_integer(1.into());
    while t <= hi {
        let step = gen::rational_between(rng, &Rational::new(1.into(), 8.into()), &Rational::new(1.into(), 2.into()));
        let next = &t + &step;
        let window = format!("({},{})", &t - Rational::new(1.into(), 16.into()), &next + Rational::new(1.into(), 16.into()));
        family.push(s(&window).intersect(x.ambient()));
        t = next;
    }
    family
}

/// A cover with no finite subcover: complements of the escape filter of a
/// non-compact component. Returns whether every finite prefix misses a point.
fn escape_cover_has_no_finite_subcover(x: &Space, depth: u64) -> bool {
    let Some(c) = x.components().into_iter().find(|c| !c.is_compact()) else { return false };
    let filter = EscapeFilter::choose(&c).unwrap();
    let members: Vec<IntervalSet> = (0..depth).map(|n| x.ambient().difference(&filter.element(n))).collect();
    let mut union = IntervalSet::empty();
    for m in &members {
        if !m.is_open_in(x.ambient()).unwrap() {
            return false;
        }
        union = union.union(m);
        if &union == x.ambient() {
            return false;
        }
    }
    true
}

#[test]
fn compactness_agrees_with_cover_oracle() {
    let cases = [
        ("[0,1]", true),
        ("[0,0]", true),
        ("[0,1] U [2,3]", true),
        ("[-5,-4] U [0,0] U [1/2,7/2]", true),
        ("[0,1] U [1,2]", true),
        ("[-1/3,1/3]", true),
        ("[0,1] U [3,3] U [5,8]", true),
        ("[0,10]", true),
        ("[0,1) U (1,2]", false),
        ("(0,1)", false),
        ("[0,1)", false),
        ("(0,1]", false),
        ("[5,inf)", false),
        ("(-inf,0]", false),
        ("(-inf,inf)", false),
        ("[0,1] U (2,3)", false),
        ("[0,1] U [2,inf)", false),
        ("(-inf,-1] U [0,0]", false),
        ("[0,0] U (1,2]", false),
        ("[-2,-1] U [0,1] U [2,3) U [4,5]", false),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (text, compact) in cases {
        let x = sp(text);
        assert_eq!(x.is_compact(), compact, "{text}");
        if compact {
            for _ in 0..5 {
                let family = grid_cover(&x, &mut rng);
                let union = family.iter().fold(IntervalSet::empty(), |acc, f| acc.union(f));
                assert_eq!(&union, x.ambient(), "{text}: generated family covers");
                let used = sweep(x.ambient(), &family).expect("sweep finds a subcover");
                let sub = used.iter().fold(IntervalSet::empty(), |acc, &i| acc.union(&family[i]));
                assert_eq!(&sub, x.ambient(), "{text}");
            }
        } else {
            assert!(escape_cover_has_no_finite_subcover(&x, 64), "{text}");
        }
    }
}

#[test]
fn separation_examples() {
    let (u, v) = sp("(-inf,inf)").separate_disjoint_closed(&s("[0,1]"), &s("[2,3]")).unwrap();
    assert_eq!((u, v), (s("(-inf,3/2)"), s("(3/2,inf)")));
    let x = sp("(0,1) U (1,2)");
    let (u, v) = x.separate_disjoint_closed(&s("(0,1)"), &s("(1,2)")).unwrap();
    assert_eq!((u, v), (s("(0,1)"), s("(1,2)")));
    let (u, v) = x.separate_disjoint_closed(&IntervalSet::empty(), &s("(1,2)")).unwrap();
    assert_eq!((u, &v), (IntervalSet::empty(), x.ambient()));
}

#[test]
fn local_connectedness_windows() {
    let x = sp("(0,1) U [2,3]");
    let lc = x.local_connectedness_certificate();
    assert_eq!(lc.windows[1].1.to_string(), "(1,4)");
    assert_eq!(s("(1,4)").intersect(x.ambient()), s("[2,3]"));
    let x = sp("[0,1) U (1,2]");
    let lc = x.local_connectedness_certificate();
    assert_eq!(lc.windows[0].1.to_string(), "(-1,1)");
    assert_eq!(s("(-1,1)").intersect(x.ambient()), s("[0,1)"));
    assert!(lc.verify(&x));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn components_partition_into_clopen_sets(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = gen::space(&mut rng, 5, true);
        let cs = x.components();
        let mut union = IntervalSet::empty();
        for (i, c) in cs.iter().enumerate() {
            let set = c.set();
            prop_assert!(x.is_open(&set).unwrap() && x.is_closed(&set).unwrap());
            for d in &cs[i + 1..] {
                prop_assert!(set.is_disjoint(&d.set()));
            }
            union = union.union(&set);
        }
        prop_assert_eq!(&union, x.ambient());
        prop_assert!(x.local_connectedness_certificate().verify(&x));
    }

    #[test]
    fn disjoint_closed_sets_separate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = gen::space(&mut rng, 5, true);
        let f = gen::closed_in(&mut rng, &x);
        let g = gen::closed_in(&mut rng, &x).difference(&gen::open_in(&mut rng, &x)).difference(&f);
        // g minus f need not be closed: only test genuinely closed pairs
        prop_assume!(x.is_closed(&g).unwrap());
        let (u, v) = x.separate_disjoint_closed(&f, &g).unwrap();
        prop_assert!(f.is_subset(&u) && g.is_subset(&v));
        prop_assert!(u.is_disjoint(&v));
        prop_assert!(x.is_open(&u).unwrap() && x.is_open(&v).unwrap());
    }
}
