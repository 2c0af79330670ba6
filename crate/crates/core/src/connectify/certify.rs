use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ExtClosedSet, ExtOpenSet, Extension, Rejection};
use crate::certificate::{Assertion, Certificate};
use crate::error::{Error, Result};
use crate::exact::IntervalSet;
use crate::gen;

/// Outcome of testing one open set for being clopen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClopenVerdict {
    /// `∅` or `Y`.
    IsTrivial,
    /// The candidate is not open to begin with.
    NotOpen(Rejection),
    /// Open, but its complement is not: a boundary point or a missing tail.
    ComplementNotOpen(Rejection),
    /// A nonempty proper clopen set. Never produced for a valid extension.
    ProperClopen,
}

impl Extension {
    /// Sample neighbourhoods of `p` and certify each meets `X`: each
    /// contains a filter element per component, and filter elements are
    /// nonempty.
    pub fn density_check(&self, samples: usize, seed: u64) -> Result<Certificate> {
        let x = self.base().ambient();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cert = Certificate::new("density");
        cert.push("X open in Y", Assertion::OpenIn(x.clone(), x.clone()));
        for i in 0..samples {
            let nbhd = gen::ext_open(&mut rng, self, true, 32);
            self.check_open(&nbhd)
                .map_err(|r| Error::DensityFailure(format!("generated neighbourhood {nbhd} is not open: {r}")))?;
            let tails = nbhd.tails().expect("neighbourhood of p");
            cert.push(format!("N{i} trace"), Assertion::OpenIn(nbhd.trace().clone(), x.clone()));
            for (d, &n) in self.filters().iter().zip(tails) {
                let element = d.element(n);
                cert.push(format!("N{i} {}:{n}", d.label()), Assertion::Subset(element.clone(), nbhd.trace().clone()));
                cert.push(format!("N{i} {}:{n}", d.label()), Assertion::Nonempty(element));
            }
            cert.push(format!("N{i} meets X"), Assertion::Nonempty(nbhd.trace().intersect(x)));
        }
        cert.conclusion = format!("every one of {samples} sampled neighbourhoods of p meets X");
        match cert.first_failure() {
            Some(step) => Err(Error::DensityFailure(format!("step {step} failed"))),
            None => Ok(cert),
        }
    }

    /// Any clopen set holding `p` contains an element of every filter, so it
    /// meets every component; a component is an interval, so its only
    /// relatively clopen subsets are `∅` and itself. Hence the set is `Y`.
    pub fn connectedness_certificate(&self) -> Result<Certificate> {
        let x = self.base().ambient();
        let mut cert = Certificate::new("connectedness");
        let mut covered = IntervalSet::empty();
        for d in self.filters() {
            if d.component.is_compact() {
                return Err(Error::InvalidExtension(format!("component {} is compact", d.component)));
            }
            let c = d.component.set();
            let element = d.element(0);
            let label = d.label();
            cert.push(format!("{label} tail nonempty"), Assertion::Nonempty(element.clone()));
            cert.push(format!("{label} tail inside"), Assertion::Subset(element.clone(), c.clone()));
            cert.push(format!("{label} tail closed"), Assertion::ClosedIn(element, c.clone()));
            cert.push(format!("{label} connected"), Assertion::Connected(c.clone()));
            cert.push(format!("{label} clopen in X"), Assertion::OpenIn(c.clone(), x.clone()));
            covered = covered.union(&c);
        }
        cert.push("components cover X", Assertion::Equal(covered, x.clone()));
        cert.conclusion = "a clopen set containing p contains every component, hence equals Y".into();
        Ok(cert)
    }

    /// Look for a concrete reason `set` is not a nontrivial clopen set.
    pub fn clopen_falsifier(&self, set: &ExtOpenSet) -> ClopenVerdict {
        if let Err(r) = self.check_open(set) {
            return ClopenVerdict::NotOpen(r);
        }
        let x = self.base().ambient();
        let trivial = match set {
            ExtOpenSet::TypeI { trace } => trace.is_empty(),
            ExtOpenSet::TypeII { trace, .. } => trace == x,
        };
        if trivial {
            return ClopenVerdict::IsTrivial;
        }
        let as_closed = ExtClosedSet { contains_extra: set.contains_extra(), trace: set.trace().clone() };
        match self.open_complement(&as_closed) {
            Err(r) => ClopenVerdict::ComplementNotOpen(r),
            Ok(_) => ClopenVerdict::ProperClopen,
        }
    }

    /// `X` carries the subspace topology: traces of open sets of `Y` are
    /// open in `X`, and open sets of `X` are open in `Y`.
    pub fn subspace_fidelity(&self, samples: usize, seed: u64) -> Result<Certificate> {
        let x = self.base().ambient();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cert = Certificate::new("subspace");
        for i in 0..samples {
            let with_extra = i % 2 == 0;
            let u = gen::ext_open(&mut rng, self, with_extra, 32);
            if !self.is_open_in_extension(&u) {
                return Err(Error::FidelityFailure(format!("generated set {u} is not open in Y")));
            }
            cert.push(format!("U{i} trace"), Assertion::OpenIn(u.trace().clone(), x.clone()));
        }
        for i in 0..samples {
            let v = gen::open_in(&mut rng, self.base());
            let lifted = ExtOpenSet::TypeI { trace: v.clone() };
            if let Err(r) = self.check_open(&lifted) {
                return Err(Error::FidelityFailure(format!("{v} open in X but rejected in Y: {r}")));
            }
            cert.push(format!("V{i} type I"), Assertion::OpenIn(v, x.clone()));
        }
        cert.conclusion = format!("{samples} traces open in X; {samples} open sets of X open in Y");
        match cert.first_failure() {
            Some(step) => Err(Error::FidelityFailure(format!("step {step} failed"))),
            None => Ok(cert),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectify::check_connectifiable;
    use crate::space::Space;

    fn y(text: &str) -> Extension {
        check_connectifiable(&Space::parse(text).unwrap()).extension().unwrap().clone()
    }

    fn s(text: &str) -> IntervalSet {
        text.parse().unwrap()
    }

    #[test]
    fn density_certificates() {
        for text in ["(0,1)", "[5,inf)", "(0,1) U (2,3] U [5,inf)"] {
            let cert = y(text).density_check(100, 1).unwrap();
            assert!(cert.replay());
        }
    }

    #[test]
    fn connectedness_single_component() {
        let cert = y("(0,1)").connectedness_certificate().unwrap();
        assert!(cert.replay());
        assert_eq!(cert.steps[0].assertion, Assertion::Nonempty(s("[1/2,1)")));
        let cert = y("(0,1) U (2,3] U [5,inf)").connectedness_certificate().unwrap();
        assert_eq!(cert.steps.len(), 3 * 5 + 1);
        assert!(cert.replay());
    }

    #[test]
    fn falsifier_examples() {
        let ext = y("(0,1)");
        assert_eq!(
            ext.clopen_falsifier(&ExtOpenSet::TypeI { trace: s("(0,1)") }),
            ClopenVerdict::ComplementNotOpen(Rejection::MissingTail { component: 0 })
        );
        assert_eq!(ext.clopen_falsifier(&ext.whole()), ClopenVerdict::IsTrivial);
        assert_eq!(ext.clopen_falsifier(&ExtOpenSet::empty()), ClopenVerdict::IsTrivial);
        assert_eq!(
            ext.clopen_falsifier(&ExtOpenSet::TypeI { trace: s("(0,1/2)") }),
            ClopenVerdict::ComplementNotOpen(Rejection::TraceNotOpen { point: "1/2".parse().unwrap() })
        );
    }

    #[test]
    fn falsifier_on_a_component() {
        // a component is clopen in X but not in Y
        let ext = y("(0,1) U (2,3)");
        let verdict = ext.clopen_falsifier(&ExtOpenSet::TypeI { trace: s("(2,3)") });
        assert_eq!(verdict, ClopenVerdict::ComplementNotOpen(Rejection::MissingTail { component: 1 }));
    }

    #[test]
    fn subspace_certificate() {
        let cert = y("(0,1) U [5,inf)").subspace_fidelity(100, 3).unwrap();
        assert_eq!(cert.steps.len(), 200);
        assert!(cert.replay());
    }
}
