use alloc::{collections::BTreeMap, string::ToString, vec::Vec};

use crate::{
    error::Error,
    group::{conjugation_orbits, EnumerationCap, Group},
    perm::Permutation,
    series, Result,
};

/// Spans up to this order are tested with the Sylow criterion, larger ones
/// with the lower central series.
pub const SMALL_SPAN: u128 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum NilpotencyRoute {
    SylowNormality,
    LowerCentral,
}

/// Nilpotency of a (typically two-generated) subgroup, together with the
/// route that decided it.
pub fn decide_nilpotent(h: &Group, cap: EnumerationCap) -> Result<(bool, NilpotencyRoute)> {
    if h.order() <= SMALL_SPAN && h.order() <= cap.max_elements as u128 {
        Ok((h.all_sylows_normal(cap)?, NilpotencyRoute::SylowNormality))
    } else {
        Ok((series::is_nilpotent(h), NilpotencyRoute::LowerCentral))
    }
}

/// Pair representatives under simultaneous conjugation.
pub(crate) struct PairClass {
    pub x: Permutation,
    #[cfg_attr(not(test), allow(dead_code))]
    pub centralizer_order: u128,
    /// Least member of each `C_G(x)`-orbit on the candidate set.
    pub ys: Vec<Permutation>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub orbit_sizes: Vec<usize>,
}

/// For every conjugacy class whose least member `x` passes `keep_x`, the
/// `C_G(x)`-orbit representatives of `candidates`. `candidates` must be
/// sorted and closed under conjugation.
pub(crate) fn pair_classes<F>(
    group: &Group,
    cap: EnumerationCap,
    keep_x: F,
    candidates: &[Permutation],
) -> Result<Vec<PairClass>>
where
    F: Fn(&Permutation) -> bool,
{
    let mut out = Vec::new();
    for class in group.conjugacy_classes(cap)? {
        let x = class.representative;
        if !keep_x(&x) {
            continue;
        }
        let centralizer = group.centralizer(&x, cap)?;
        let orbits = conjugation_orbits(centralizer.generators(), candidates);
        out.push(PairClass {
            x,
            centralizer_order: centralizer.order(),
            ys: orbits.iter().map(|o| candidates[o[0]].clone()).collect(),
            orbit_sizes: orbits.iter().map(Vec::len).collect(),
        });
    }
    Ok(out)
}

/// Canonical representative of the pair `(x, y)` up to simultaneous
/// conjugation in `group`: `x` becomes the least member of its class and
/// `y` the least member of its orbit under the centralizer of that `x`.
pub fn pair_orbit_representative(
    group: &Group,
    x: &Permutation,
    y: &Permutation,
    cap: EnumerationCap,
) -> Result<(Permutation, Permutation)> {
    for e in [x, y] {
        if !group.contains(e)? {
            return Err(Error::NotMember(e.to_string()));
        }
    }
    let x = x.embed(group.degree());
    let y = y.embed(group.degree());
    // conjugator carrying x to each member of its class
    let mut reached: BTreeMap<Permutation, Permutation> = BTreeMap::new();
    reached.insert(x.clone(), Permutation::identity(group.degree()));
    let mut queue = alloc::vec![x];
    let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
    while let Some(current) = queue.pop() {
        let conj = reached[&current].clone();
        for g in &gens {
            let next = current.conjugate(g);
            if !reached.contains_key(&next) {
                reached.insert(next.clone(), conj.compose(g));
                queue.push(next);
            }
        }
    }
    let (x0, conj) = reached.into_iter().next().expect("class is nonempty");
    let y1 = y.conjugate(&conj);
    let centralizer = group.centralizer(&x0, cap)?;
    let mut orbit = alloc::collections::BTreeSet::new();
    orbit.insert(y1.clone());
    let mut queue = alloc::vec![y1];
    let cgens: Vec<&Permutation> = centralizer.nontrivial_generators().collect();
    while let Some(current) = queue.pop() {
        for g in &cgens {
            let next = current.conjugate(g);
            if orbit.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let y0 = orbit.into_iter().next().expect("orbit is nonempty");
    Ok((x0, y0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::ConstructionSpec;

    #[test]
    fn routes_agree_on_small_groups() {
        let cap = EnumerationCap::DEFAULT;
        for spec in ["sym(4)", "dih2(3)", "wreath(cyc(2),cyc(4))", "cyc(6)", "direct(sym(3),cyc(2))"] {
            let g = spec.parse::<ConstructionSpec>().unwrap().build().unwrap();
            let (nil, route) = decide_nilpotent(&g, cap).unwrap();
            assert_eq!(route, NilpotencyRoute::SylowNormality);
            assert_eq!(nil, series::is_nilpotent(&g), "{spec}");
        }
        let s7 = ConstructionSpec::Symmetric(7).build().unwrap();
        assert_eq!(decide_nilpotent(&s7, cap).unwrap(), (false, NilpotencyRoute::LowerCentral));
    }

    #[test]
    fn pair_representatives_are_conjugation_invariant() {
        let cap = EnumerationCap::DEFAULT;
        let s4 = ConstructionSpec::Symmetric(4).build().unwrap();
        let x: Permutation = "(1,2,3,4)".parse().unwrap();
        let y: Permutation = "(1,2)".parse().unwrap();
        let rep = pair_orbit_representative(&s4, &x, &y, cap).unwrap();
        for g in s4.elements(cap).unwrap() {
            let other = pair_orbit_representative(&s4, &x.conjugate(g), &y.conjugate(g), cap).unwrap();
            assert_eq!(other, rep);
        }
    }

    #[test]
    fn pair_classes_cover_all_pairs() {
        let cap = EnumerationCap::DEFAULT;
        let s4 = ConstructionSpec::Symmetric(4).build().unwrap();
        let els = s4.elements(cap).unwrap();
        let classes = pair_classes(&s4, cap, |_| true, els).unwrap();
        // sum over classes of |class| * |G| = |G|^2
        let total: u128 =
            classes.iter().map(|c| (24 / c.centralizer_order) * c.orbit_sizes.iter().sum::<usize>() as u128).sum();
        assert_eq!(total, 24 * 24);
    }
}
