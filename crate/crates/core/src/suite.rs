//! The invariant suite: each check runs a family of exact verifications over
//! a seeded corpus and reports every failure it meets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compactify::{compactify, CompactExtension, CompactOpenSet, CompactVerdict};
use crate::connectify::{check_connectifiable, ClopenVerdict, EscapeFilter, ExtOpenSet, ExtPoint, Extension, Verdict};
use crate::finite::{enumerate_by_preorders, enumerate_topologies, search_one_point_connectifications, Axiom, Preorder};
use crate::gen;
use crate::space::Space;

pub const TOPOLOGY_COUNTS: [usize; 7] = [1, 1, 4, 29, 355, 6942, 209527];

/// At most this many failure messages are kept per check.
const KEPT_FAILURES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub corpus: usize,
    pub neighbourhoods: usize,
    pub fidelity: usize,
    pub candidates: usize,
    pub point_pairs: usize,
    pub closed_pairs: usize,
    pub filter_depth: u64,
    pub filter_points: usize,
    pub covers: usize,
    pub set_samples: usize,
    pub finite_max: usize,
    pub micro_max: usize,
}

impl SuiteConfig {
    /// Sizes the acceptance criteria are stated at.
    pub fn full() -> Self {
        SuiteConfig {
            seed: 20_140_711,
            corpus: 200,
            neighbourhoods: 100,
            fidelity: 100,
            candidates: 200,
            point_pairs: 100,
            closed_pairs: 50,
            filter_depth: 64,
            filter_points: 200,
            covers: 20,
            set_samples: 500,
            finite_max: 4,
            micro_max: 4,
        }
    }

    /// A smaller run for `selftest`.
    pub fn quick() -> Self {
        SuiteConfig {
            corpus: 40,
            neighbourhoods: 20,
            fidelity: 20,
            candidates: 40,
            point_pairs: 20,
            closed_pairs: 10,
            filter_points: 50,
            covers: 5,
            set_samples: 200,
            ..SuiteConfig::full()
        }
    }

    pub fn corpus_spaces(&self) -> Vec<Space> {
        gen::corpus(&mut ChaCha8Rng::seed_from_u64(self.seed), self.corpus)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome { name, cases: 0, failure_count: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, message: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(message);
        }
    }
}

fn extensions(corpus: &[Space]) -> impl Iterator<Item = Extension> + '_ {
    corpus.iter().filter_map(|x| check_connectifiable(x).extension().cloned())
}

/// Refused exactly when some component is compact, and the refused component is clopen in `X`.
pub fn verdict_dichotomy(corpus: &[Space]) -> CheckOutcome {
    let mut out = CheckOutcome::new("verdict-dichotomy");
    for x in corpus {
        let verdict = check_connectifiable(x);
        let compact = x.has_compact_component();
        out.case(matches!(verdict, Verdict::Refused { .. }) == compact.is_some(), || format!("{x}: verdict disagrees"));
        if let Verdict::Refused { component } = verdict {
            let c = component.set();
            let clopen = x.is_closed(&c) == Ok(true) && x.is_open(&c) == Ok(true);
            out.case(clopen && component.is_compact(), || format!("{x}: {component} is not a clopen compact witness"));
        }
    }
    out
}

pub fn construction_soundness(corpus: &[Space], cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("construction-soundness");
    let mut rng = cfg.rng(2);
    for (i, y) in extensions(corpus).enumerate() {
        let x = y.base().clone();
        let seed = cfg.seed + i as u64;
        match y.density_check(cfg.neighbourhoods, seed) {
            Ok(cert) => out.case(cert.replay(), || format!("{x}: density certificate does not replay")),
            Err(e) => out.case(false, || format!("{x}: {e}")),
        }
        match y.subspace_fidelity(cfg.fidelity, seed) {
            Ok(cert) => out.case(cert.replay(), || format!("{x}: fidelity certificate does not replay")),
            Err(e) => out.case(false, || format!("{x}: {e}")),
        }
        match y.connectedness_certificate() {
            Ok(cert) => out.case(cert.replay(), || format!("{x}: connectedness certificate does not replay")),
            Err(e) => out.case(false, || format!("{x}: {e}")),
        }
        for candidate in gen::clopen_candidates(&mut rng, &y, cfg.candidates) {
            let verdict = y.clopen_falsifier(&candidate);
            let ok = match &verdict {
                ClopenVerdict::ProperClopen => false,
                ClopenVerdict::IsTrivial => is_trivial(&y, &candidate),
                ClopenVerdict::NotOpen(_) => !y.is_open_in_extension(&candidate),
                ClopenVerdict::ComplementNotOpen(_) => y.is_open_in_extension(&candidate) && !is_trivial(&y, &candidate),
            };
            out.case(ok, || format!("{x}: candidate {candidate} gave {verdict:?}"));
        }
    }
    out
}

fn is_trivial(y: &Extension, set: &ExtOpenSet) -> bool {
    let empty = !set.contains_extra() && set.trace().is_empty();
    let whole = set.contains_extra() && set.trace() == y.base().ambient();
    empty || whole
}

/// Point and closed-set separations, re-verified independently.
pub fn witness_soundness(corpus: &[Space], cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("witness-soundness");
    let mut rng = cfg.rng(3);
    for y in extensions(corpus) {
        let x = y.base();
        for _ in 0..cfg.point_pairs {
            let (a, b) = gen::point_pair(&mut rng, &y);
            match y.hausdorff_witness(&a, &b) {
                Ok((u, v)) => {
                    let check = y.verify_point_separation(&a, &b, &u, &v);
                    out.case(check.is_ok(), || format!("{x}: {a} vs {b}: {}", check.unwrap_err()));
                }
                Err(e) => out.case(false, || format!("{x}: {a} vs {b}: {e}")),
            }
        }
        for _ in 0..cfg.closed_pairs {
            let (f, g) = gen::disjoint_closed_pair(&mut rng, &y);
            match y.normality_witness(&f, &g) {
                Ok(sep) => {
                    let check = y.verify_set_separation(&f, &g, &sep);
                    out.case(check.is_ok(), || format!("{x}: F={f} G={g}: {}", check.unwrap_err()));
                    if f.contains_extra || g.contains_extra {
                        out.case(y.matches_component_shape(&sep), || format!("{x}: F={f} G={g}: shape mismatch"));
                    }
                }
                Err(e) => out.case(false, || format!("{x}: F={f} G={g}: {e}")),
            }
        }
    }
    out
}

/// Nested, nonempty, closed in the component, and avoiding sampled points.
pub fn filter_laws(corpus: &[Space], cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("filter-laws");
    let mut rng = cfg.rng(4);
    for x in corpus {
        for c in x.components() {
            let filter = match EscapeFilter::choose(&c) {
                Ok(d) => d,
                Err(_) => {
                    out.case(c.is_compact(), || format!("{x}: no filter for non-compact {c}"));
                    continue;
                }
            };
            let set = c.set();
            let mut previous = filter.element(0);
            for n in 0..=cfg.filter_depth {
                let element = filter.element(n);
                out.case(!element.is_empty(), || format!("{filter}: element {n} empty"));
                out.case(element.is_subset(&previous), || format!("{filter}: element {n} not nested"));
                out.case(element.is_closed_in(&set) == Ok(true), || format!("{filter}: element {n} not closed"));
                previous = element;
            }
            for _ in 0..cfg.filter_points {
                let z = gen::point_in(&mut rng, &c);
                let ok = filter.avoid_index(&z).map(|n| !filter.element(n).contains(&z)).unwrap_or(false);
                out.case(ok, || format!("{filter}: {z} not avoided"));
            }
        }
    }
    out
}

/// Both enumerators agree and match the known counts.
pub fn finite_agreement(max_size: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("finite-agreement");
    for (n, &expected) in TOPOLOGY_COUNTS.iter().enumerate().take(max_size + 1) {
        match enumerate_topologies(n) {
            Ok(e) => out.case(e.count() == expected && e.cross_checked == (n <= 4), || {
                format!("n={n}: count {} expected {expected}", e.count())
            }),
            Err(err) => out.case(false, || format!("n={n}: {err}")),
        }
    }
    out
}

/// Preorder round trip, component algorithms and local connectedness on every small space.
pub fn finite_laws(max_size: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("finite-laws");
    for n in 0..=max_size {
        for t in enumerate_by_preorders(n).unwrap_or_default() {
            let p = Preorder::from_topology(&t);
            out.case(p.to_topology() == t, || format!("{t}: round trip"));
            out.case(Preorder::from_topology(&p.to_topology()) == p, || format!("{t}: preorder round trip"));
            out.case(t.components_by_scan() == t.components_by_growth(), || format!("{t}: components differ"));
            out.case(t.check_axiom(Axiom::LocallyConnected), || format!("{t}: not locally connected"));
            let literal = t.to_string().parse();
            out.case(literal.as_ref() == Ok(&t), || format!("{t}: literal round trip"));
        }
    }
    out
}

/// No `T1` space on `1..=max_size` points has a connected Hausdorff one-point extension.
pub fn micro_necessity(max_size: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("micro-necessity");
    for n in 1..=max_size {
        for t in enumerate_by_preorders(n).unwrap_or_default().into_iter().filter(|t| t.check_axiom(Axiom::T1)) {
            match search_one_point_connectifications(&t, Axiom::T2) {
                Ok(found) => out.case(found.is_empty(), || format!("{t}: {} Hausdorff extensions", found.len())),
                Err(e) => out.case(false, || format!("{t}: {e}")),
            }
        }
    }
    out
}

/// On one-component spaces the compactification and the connectification
/// refuse together; compactification witnesses and subcovers verify.
pub fn compactification_duality(corpus: &[Space], cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("compactification-duality");
    let mut rng = cfg.rng(7);
    for x in corpus.iter().filter(|x| x.components().len() == 1) {
        let compact = compactify(x);
        let connect = check_connectifiable(x);
        out.case(
            matches!(compact, CompactVerdict::Refused) == matches!(connect, Verdict::Refused { .. }),
            || format!("{x}: verdicts differ"),
        );
        let CompactVerdict::Compactifiable(y) = compact else { continue };
        for _ in 0..cfg.point_pairs {
            let a = gen::point_in_space(&mut rng, x);
            let b = if rng.gen_bool(0.5) { ExtPoint::Extra } else { ExtPoint::Base(gen::point_in_space(&mut rng, x)) };
            let a = ExtPoint::Base(a);
            if a == b {
                continue;
            }
            let check = y
                .hausdorff_witness(&a, &b)
                .map_err(|e| e.to_string())
                .and_then(|(u, v)| verify_compact_separation(&y, &a, &b, &u, &v));
            out.case(check.is_ok(), || format!("{x}: {a} vs {b}: {}", check.unwrap_err()));
        }
        for _ in 0..cfg.covers {
            let cover = gen::compact_cover(&mut rng, &y);
            let members: Vec<&CompactOpenSet> = cover.iter().collect();
            out.case(y.covers(&members), || format!("{x}: generated family is not a cover"));
            match y.finite_subcover(&cover) {
                Ok(indices) => {
                    let sub: Vec<&CompactOpenSet> = indices.iter().map(|&i| &cover[i]).collect();
                    out.case(y.covers(&sub), || format!("{x}: subcover {indices:?} misses a point"));
                }
                Err(e) => out.case(false, || format!("{x}: {e}")),
            }
        }
    }
    out
}

fn verify_compact_separation(
    y: &CompactExtension,
    a: &ExtPoint,
    b: &ExtPoint,
    u: &CompactOpenSet,
    v: &CompactOpenSet,
) -> Result<(), String> {
    for (name, set) in [("U", u), ("V", v)] {
        y.check_open(set).map_err(|r| format!("{name} not open: {r}"))?;
    }
    if !y.contains(u, a) || !y.contains(v, b) {
        return Err("a point is outside its neighbourhood".into());
    }
    let meet = u.trace(y.base()).intersect(&v.trace(y.base()));
    if !meet.is_empty() || (u.contains_infinity() && v.contains_infinity()) {
        return Err("U and V meet".into());
    }
    Ok(())
}

/// Boolean-algebra and closure laws on random sets.
pub fn set_algebra(cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("set-algebra");
    let mut rng = cfg.rng(8);
    for _ in 0..cfg.set_samples {
        let x = gen::space(&mut rng, 4, true);
        let a = gen::space(&mut rng, 4, true).ambient().clone();
        let b = gen::space(&mut rng, 4, true).ambient().clone();
        let de_morgan = a.union(&b).complement() == a.complement().intersect(&b.complement())
            && a.intersect(&b).complement() == a.complement().union(&b.complement());
        out.case(de_morgan, || format!("De Morgan fails for {a} and {b}"));
        out.case(a.complement().complement() == a, || format!("double complement of {a}"));
        let s = a.intersect(x.ambient());
        let amb = x.ambient();
        let (Ok(cl), Ok(int)) = (s.closure_in(amb), s.interior_in(amb)) else {
            out.case(false, || format!("closure or interior of {s} in {x} failed"));
            continue;
        };
        out.case(cl.closure_in(amb).as_ref() == Ok(&cl), || format!("closure of {s} in {x} not idempotent"));
        out.case(int.interior_in(amb).as_ref() == Ok(&int), || format!("interior of {s} in {x} not idempotent"));
        out.case(int.is_subset(&s) && s.is_subset(&cl), || format!("interior, set, closure out of order for {s}"));
        out.case(x.is_closed(&cl) == Ok(true) && x.is_open(&int) == Ok(true), || format!("{s} in {x}: wrong kinds"));
    }
    out
}

pub fn run(cfg: &SuiteConfig) -> Vec<CheckOutcome> {
    let corpus = cfg.corpus_spaces();
    vec![
        set_algebra(cfg),
        verdict_dichotomy(&corpus),
        construction_soundness(&corpus, cfg),
        witness_soundness(&corpus, cfg),
        filter_laws(&corpus, cfg),
        finite_agreement(cfg.finite_max),
        finite_laws(cfg.finite_max),
        micro_necessity(cfg.micro_max),
        compactification_duality(&corpus, cfg),
    ]
}
