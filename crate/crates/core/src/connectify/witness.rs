use super::{ExtClosedSet, ExtOpenSet, ExtPoint, Extension};
use crate::error::{Error, Result};
use crate::exact::{int, Interval, IntervalSet, Rational};
use crate::space::Space;

/// The per-component pieces of a normality witness in the case where one
/// closed set holds `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPart {
    pub component: usize,
    /// Index of the filter element lying outside the other closed set.
    pub tail: u64,
    pub element: IntervalSet,
    /// Open piece of the component around the closed set holding `p`, plus the element.
    pub with_extra: IntervalSet,
    /// Open piece of the component around the other closed set.
    pub without_extra: IntervalSet,
}

/// Disjoint open sets `u ⊇ F` and `v ⊇ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSeparation {
    pub u: ExtOpenSet,
    pub v: ExtOpenSet,
    /// Empty when neither closed set holds `p`.
    pub parts: Vec<ComponentPart>,
}

fn below(m: Rational, x: &IntervalSet) -> IntervalSet {
    IntervalSet::from(Interval::below(m)).intersect(x)
}

fn above(m: Rational, x: &IntervalSet) -> IntervalSet {
    IntervalSet::from(Interval::above(m)).intersect(x)
}

impl Extension {
    fn require_point(&self, point: &ExtPoint) -> Result<()> {
        match point {
            ExtPoint::Base(q) if !self.base().contains(q) => Err(Error::PointOutsideSpace(q.to_string())),
            _ => Ok(()),
        }
    }

    /// Disjoint open sets `(U, V)` with `y ∈ U` and `z ∈ V`.
    ///
    /// Two points of `X` are split at their midpoint. For `p` against a point
    /// `z` of a component `C`, the filter element one past the first that
    /// misses `z` is kept away from a small interval around `z`, and the
    /// neighbourhood of `p` is the rest of `Y ∖ C` together with the far side
    /// of that cut inside `C`.
    pub fn hausdorff_witness(&self, y: &ExtPoint, z: &ExtPoint) -> Result<(ExtOpenSet, ExtOpenSet)> {
        self.require_point(y)?;
        self.require_point(z)?;
        if y == z {
            return Err(Error::EqualPoints);
        }
        let x = self.base().ambient();
        match (y, z) {
            (ExtPoint::Base(a), ExtPoint::Base(b)) => {
                let m = (a + b) / int(2);
                let (left, right) = (below(m.clone(), x), above(m, x));
                let (u, v) = if a < b { (left, right) } else { (right, left) };
                Ok((ExtOpenSet::TypeI { trace: u }, ExtOpenSet::TypeI { trace: v }))
            }
            (ExtPoint::Extra, ExtPoint::Base(b)) => self.separate_extra_from(b),
            (ExtPoint::Base(a), ExtPoint::Extra) => {
                let (u, v) = self.separate_extra_from(a)?;
                Ok((v, u))
            }
            (ExtPoint::Extra, ExtPoint::Extra) => unreachable!("equal points handled above"),
        }
    }

    fn separate_extra_from(&self, z: &Rational) -> Result<(ExtOpenSet, ExtOpenSet)> {
        let filter = self.filter_of(z)?;
        let c = filter.component.set();
        let n = filter
            .avoid_index(z)?
            .checked_add(1)
            .ok_or_else(|| Error::InvalidExtension("tail index overflow".into()))?;
        let s = filter.inner_bound(n);
        let m = (z + &s) / int(2);
        let mirror = int(2) * z - &m;
        let (near, far) = if filter.direction.points_right() {
            (IntervalSet::from(Interval::open(mirror, m.clone())?), above(m, &c))
        } else {
            (IntervalSet::from(Interval::open(m.clone(), mirror)?), below(m, &c))
        };
        let near = near.intersect(&c);
        let rest = self.base().ambient().difference(&c);
        let mut tails = vec![0; self.filters().len()];
        tails[filter.component.index] = n;
        let u = ExtOpenSet::TypeII { trace: rest.union(&far), tails };
        Ok((u, ExtOpenSet::TypeI { trace: near }))
    }

    /// Disjoint open sets around two disjoint closed sets of `Y`.
    ///
    /// Without `p` this is the separation in `X`. When `p ∈ F`, each
    /// component `C` contributes an element `A_C` of its filter lying in
    /// `Y ∖ G`; `(F ∩ X) ∪ A_C` and `G` are separated inside `C`, and the
    /// results are `{p} ∪ ⋃ (C ∩ U_C)` and `⋃ (C ∩ V_C)`.
    pub fn normality_witness(&self, f: &ExtClosedSet, g: &ExtClosedSet) -> Result<SetSeparation> {
        for set in [f, g] {
            if !self.is_closed_in_extension(set) {
                return Err(Error::NotClosedInY(set.to_string()));
            }
        }
        if f.contains_extra && g.contains_extra {
            return Err(Error::PInBoth);
        }
        if !f.trace.is_disjoint(&g.trace) {
            return Err(Error::NotDisjoint(f.to_string(), g.to_string()));
        }
        if g.contains_extra {
            let swapped = self.separate_from_extra(g, f)?;
            return Ok(SetSeparation { u: swapped.v, v: swapped.u, parts: swapped.parts });
        }
        if f.contains_extra {
            return self.separate_from_extra(f, g);
        }
        let (u, v) = self.base().separate_disjoint_closed(&f.trace, &g.trace)?;
        Ok(SetSeparation { u: ExtOpenSet::TypeI { trace: u }, v: ExtOpenSet::TypeI { trace: v }, parts: Vec::new() })
    }

    fn separate_from_extra(&self, f: &ExtClosedSet, g: &ExtClosedSet) -> Result<SetSeparation> {
        let outside_g = self.base().ambient().difference(&g.trace);
        let tails = self
            .required_tails(&outside_g)
            .map_err(|r| Error::NotClosedInY(format!("{g}: {r}")))?;
        let mut parts = Vec::with_capacity(tails.len());
        for (filter, &tail) in self.filters().iter().zip(&tails) {
            let c = filter.component.set();
            let element = filter.element(tail);
            let f_c = f.trace.union(&element).intersect(&c);
            let g_c = g.trace.intersect(&c);
            let (with_extra, without_extra) = Space::new(c)?.separate_disjoint_closed(&f_c, &g_c)?;
            parts.push(ComponentPart { component: filter.component.index, tail, element, with_extra, without_extra });
        }
        let u_trace = parts.iter().fold(IntervalSet::empty(), |acc, p| acc.union(&p.with_extra));
        let v_trace = parts.iter().fold(IntervalSet::empty(), |acc, p| acc.union(&p.without_extra));
        Ok(SetSeparation {
            u: ExtOpenSet::TypeII { trace: u_trace, tails },
            v: ExtOpenSet::TypeI { trace: v_trace },
            parts,
        })
    }

    /// Independent re-check of a point separation.
    pub fn verify_point_separation(
        &self,
        y: &ExtPoint,
        z: &ExtPoint,
        u: &ExtOpenSet,
        v: &ExtOpenSet,
    ) -> std::result::Result<(), String> {
        for (name, set) in [("U", u), ("V", v)] {
            self.check_open(set).map_err(|r| format!("{name} not open: {r}"))?;
        }
        if !u.contains(y) {
            return Err(format!("{y} not in U"));
        }
        if !v.contains(z) {
            return Err(format!("{z} not in V"));
        }
        if !u.is_disjoint(v) {
            return Err("U and V meet".into());
        }
        Ok(())
    }

    /// Independent re-check of a closed-set separation.
    pub fn verify_set_separation(
        &self,
        f: &ExtClosedSet,
        g: &ExtClosedSet,
        sep: &SetSeparation,
    ) -> std::result::Result<(), String> {
        for (name, set) in [("U", &sep.u), ("V", &sep.v)] {
            self.check_open(set).map_err(|r| format!("{name} not open: {r}"))?;
        }
        let covers = |closed: &ExtClosedSet, open: &ExtOpenSet| {
            closed.trace.is_subset(open.trace()) && (!closed.contains_extra || open.contains_extra())
        };
        if !covers(f, &sep.u) {
            return Err("F not inside U".into());
        }
        if !covers(g, &sep.v) {
            return Err("G not inside V".into());
        }
        if !sep.u.is_disjoint(&sep.v) {
            return Err("U and V meet".into());
        }
        Ok(())
    }

    /// Whether a separation with `p` on one side has the displayed shape:
    /// the side with `p` is `{p} ∪ ⋃ (C ∩ U_C)` with the recorded tails, the
    /// other is `⋃ (C ∩ V_C)`, each piece inside its component, and each
    /// filter element inside the `p` side.
    pub fn matches_component_shape(&self, sep: &SetSeparation) -> bool {
        let (with, without) = match (&sep.u, &sep.v) {
            (w @ ExtOpenSet::TypeII { .. }, o @ ExtOpenSet::TypeI { .. }) => (w, o),
            (o @ ExtOpenSet::TypeI { .. }, w @ ExtOpenSet::TypeII { .. }) => (w, o),
            _ => return false,
        };
        if sep.parts.len() != self.filters().len() {
            return false;
        }
        let mut with_union = IntervalSet::empty();
        let mut without_union = IntervalSet::empty();
        for (part, filter) in sep.parts.iter().zip(self.filters()) {
            let c = filter.component.set();
            let ok = part.component == filter.component.index
                && part.element == filter.element(part.tail)
                && part.element.is_subset(&part.with_extra)
                && part.with_extra.is_subset(&c)
                && part.without_extra.is_subset(&c);
            if !ok {
                return false;
            }
            with_union = with_union.union(&part.with_extra);
            without_union = without_union.union(&part.without_extra);
        }
        let tails: Vec<u64> = sep.parts.iter().map(|p| p.tail).collect();
        with.trace() == &with_union && with.tails() == Some(&tails[..]) && without.trace() == &without_union
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectify::check_connectifiable;

    fn y(text: &str) -> Extension {
        check_connectifiable(&Space::parse(text).unwrap()).extension().unwrap().clone()
    }

    fn s(text: &str) -> IntervalSet {
        text.parse().unwrap()
    }

    fn pt(text: &str) -> ExtPoint {
        text.parse().unwrap()
    }

    #[test]
    fn extra_point_against_far_point() {
        let ext = y("[5,inf)");
        let (u, v) = ext.hausdorff_witness(&ExtPoint::Extra, &pt("20")).unwrap();
        assert_eq!(u, ExtOpenSet::TypeII { trace: s("(21,inf)"), tails: vec![16] });
        assert_eq!(v, ExtOpenSet::TypeI { trace: s("(19,21)") });
        assert_eq!(ext.filters()[0].element(16), s("[22,inf)"));
        ext.verify_point_separation(&ExtPoint::Extra, &pt("20"), &u, &v).unwrap();
    }

    #[test]
    fn two_base_points_split_at_midpoint() {
        let ext = y("(0,1)");
        let (u, v) = ext.hausdorff_witness(&pt("1/4"), &pt("3/4")).unwrap();
        assert_eq!((u.trace(), v.trace()), (&s("(0,1/2)"), &s("(1/2,1)")));
        let (u, v) = ext.hausdorff_witness(&pt("3/4"), &pt("1/4")).unwrap();
        assert_eq!((u.trace(), v.trace()), (&s("(1/2,1)"), &s("(0,1/2)")));
    }

    #[test]
    fn extra_neighbourhood_swallows_other_components() {
        let ext = y("(0,1) U (2,3]");
        let (u, v) = ext.hausdorff_witness(&ExtPoint::Extra, &pt("5/2")).unwrap();
        assert!(s("(0,1)").is_subset(u.trace()));
        ext.verify_point_separation(&ExtPoint::Extra, &pt("5/2"), &u, &v).unwrap();
        // left-pointing filter on (2,3]
        let (v2, u2) = ext.hausdorff_witness(&pt("5/2"), &ExtPoint::Extra).unwrap();
        assert_eq!((u2, v2), (u, v));
    }

    #[test]
    fn hausdorff_errors() {
        let ext = y("(0,1)");
        assert_eq!(ext.hausdorff_witness(&ExtPoint::Extra, &ExtPoint::Extra), Err(Error::EqualPoints));
        assert_eq!(ext.hausdorff_witness(&pt("1/2"), &pt("1/2")), Err(Error::EqualPoints));
        assert!(matches!(ext.hausdorff_witness(&pt("2"), &pt("1/2")), Err(Error::PointOutsideSpace(_))));
    }

    #[test]
    fn normality_with_extra_point() {
        let ext = y("[5,inf)");
        let f = ExtClosedSet::extra();
        let g = ExtClosedSet::parse("[5,7]").unwrap();
        let sep = ext.normality_witness(&f, &g).unwrap();
        assert_eq!(sep.u, ExtOpenSet::TypeII { trace: s("(15/2,inf)"), tails: vec![2] });
        assert_eq!(sep.v, ExtOpenSet::TypeI { trace: s("[5,15/2)") });
        ext.verify_set_separation(&f, &g, &sep).unwrap();
        assert!(ext.matches_component_shape(&sep));

        let f = ExtClosedSet::parse("p+[10,inf)").unwrap();
        let g = ExtClosedSet::parse("[5,6]").unwrap();
        let sep = ext.normality_witness(&f, &g).unwrap();
        ext.verify_set_separation(&f, &g, &sep).unwrap();
        assert!(ext.matches_component_shape(&sep));
        // swapped roles keep U around the first argument
        let swapped = ext.normality_witness(&g, &f).unwrap();
        ext.verify_set_separation(&g, &f, &swapped).unwrap();
        assert_eq!((swapped.u, swapped.v), (sep.v, sep.u));
    }

    #[test]
    fn normality_without_extra_point_delegates() {
        let ext = y("(0,1) U (2,3)");
        let f = ExtClosedSet::parse("[1/4,1/2]").unwrap();
        let g = ExtClosedSet::parse("[5/2,11/4]").unwrap();
        let sep = ext.normality_witness(&f, &g).unwrap();
        let (u, v) = ext.base().separate_disjoint_closed(&f.trace, &g.trace).unwrap();
        assert_eq!((sep.u.trace(), sep.v.trace()), (&u, &v));
        assert!(sep.parts.is_empty());
    }

    #[test]
    fn normality_errors() {
        let ext = y("[5,inf)");
        let open_ish = ExtClosedSet::parse("[10,inf)").unwrap();
        assert!(matches!(
            ext.normality_witness(&open_ish, &ExtClosedSet::parse("[5,6]").unwrap()),
            Err(Error::NotClosedInY(_))
        ));
        assert_eq!(
            ext.normality_witness(&ExtClosedSet::extra(), &ExtClosedSet::parse("p+[5,6]").unwrap()),
            Err(Error::PInBoth)
        );
        assert!(matches!(
            ext.normality_witness(&ExtClosedSet::parse("[5,7]").unwrap(), &ExtClosedSet::parse("[6,8]").unwrap()),
            Err(Error::NotDisjoint(..))
        ));
    }
}
