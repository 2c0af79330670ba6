use onepoint::compactify::{compactify, CompactExtension, CompactOpenSet, CompactVerdict};
use onepoint::connectify::{check_connectifiable, ExtPoint, Verdict};
use onepoint::exact::IntervalSet;
use onepoint::gen;
use onepoint::space::Space;
use onepoint::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn s(text: &str) -> IntervalSet {
    text.parse().unwrap()
}

fn ext(text: &str) -> CompactExtension {
    match compactify(&Space::parse(text).unwrap()) {
        CompactVerdict::Compactifiable(y) => y,
        CompactVerdict::Refused => panic!("{text} refused"),
    }
}

#[test]
fn witness_examples() {
    let y = ext("(0,1)");
    let (u, v) = y.hausdorff_witness(&ExtPoint::Extra, &"1/2".parse().unwrap()).unwrap();
    assert_eq!(u, CompactOpenSet::TypeInf { compact: s("[1/4,3/4]") });
    assert_eq!(v, CompactOpenSet::TypeI { trace: s("(1/4,3/4)") });
    let y = ext("[5,inf)");
    let (u, v) = y.hausdorff_witness(&ExtPoint::Extra, &"5".parse().unwrap()).unwrap();
    assert_eq!(u.trace(y.base()), s("(6,inf)"));
    assert_eq!(v, CompactOpenSet::TypeI { trace: s("[5,6)") });
}

#[test]
fn subcover_examples() {
    let y = ext("(0,1)");
    let cover = vec![
        CompactOpenSet::TypeInf { compact: s("[1/4,3/4]") },
        CompactOpenSet::TypeI { trace: s("(1/8,1/2)") },
        CompactOpenSet::TypeI { trace: s("(3/8,7/8)") },
    ];
    assert_eq!(y.finite_subcover(&cover).unwrap(), vec![0, 1, 2]);
    let whole = vec![CompactOpenSet::TypeInf { compact: IntervalSet::empty() }];
    assert_eq!(y.finite_subcover(&whole).unwrap(), vec![0]);
    let no_infinity = vec![CompactOpenSet::TypeI { trace: s("(0,1)") }];
    assert!(matches!(y.finite_subcover(&no_infinity), Err(Error::NotACover(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn duality_and_covers(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = gen::space(&mut rng, 3, true);
        let compact = compactify(&x);
        prop_assert_eq!(matches!(compact, CompactVerdict::Refused), x.is_compact());
        if x.components().len() == 1 {
            let connect = check_connectifiable(&x);
            prop_assert_eq!(matches!(compact, CompactVerdict::Refused), matches!(connect, Verdict::Refused { .. }));
        }
        if let CompactVerdict::Compactifiable(y) = compact {
            for _ in 0..5 {
                let cover = gen::compact_cover(&mut rng, &y);
                let all: Vec<&CompactOpenSet> = cover.iter().collect();
                prop_assert!(y.covers(&all));
                let used = y.finite_subcover(&cover).unwrap();
                let sub: Vec<&CompactOpenSet> = used.iter().map(|&i| &cover[i]).collect();
                prop_assert!(y.covers(&sub));
            }
            let z = gen::point_in_space(&mut rng, &x);
            let (u, v) = y.hausdorff_witness(&ExtPoint::Extra, &ExtPoint::Base(z.clone())).unwrap();
            prop_assert!(y.is_open_in_compactification(&u) && y.is_open_in_compactification(&v));
            prop_assert!(v.trace(&x).contains(&z));
            prop_assert!(u.trace(&x).is_disjoint(&v.trace(&x)));
        }
    }
}
