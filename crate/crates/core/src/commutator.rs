//! Commutators, left-normed commutators and Engel degrees.
//!
//! `[a, b] = a⁻¹b⁻¹ab`, `[x, _0 y] = x` and `[x, _{k+1} y] = [[x, _k y], y]`.

use alloc::{collections::BTreeMap, string::ToString, vec, vec::Vec};

use crate::{error::Error, group::Group, perm::Permutation, series, Result};

/// `a⁻¹b⁻¹ab`.
pub fn comm(a: &Permutation, b: &Permutation) -> Permutation {
    let degree = a.degree().max(b.degree());
    let a_inv = a.inverse();
    let b_inv = b.inverse();
    let images = (0..degree).map(|i| b.image(a.image(b_inv.image(a_inv.image(i)))) as u32).collect();
    Permutation::from_images(images).expect("commutator is a permutation")
}

/// Left-normed commutator `[a_1, a_2, …, a_k] = [[a_1, …, a_{k-1}], a_k]`.
pub fn comm_seq(elements: &[&Permutation]) -> Permutation {
    let (first, rest) = elements.split_first().expect("at least one entry");
    rest.iter().fold((*first).clone(), |acc, e| comm(&acc, e))
}

/// `[x, _n y]`.
pub fn left_normed(x: &Permutation, y: &Permutation, n: usize) -> Permutation {
    let mut c = x.clone();
    for _ in 0..n {
        if c.is_identity() {
            break;
        }
        c = comm(&c, y);
    }
    c
}

/// Result of iterating `c ↦ [c, y]` from `c = x` until the identity or a
/// repeated element appears.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EngelOutcome {
    /// Least `n` with `[x, _n y] = 1`.
    pub degree: Option<usize>,
    /// Index in `trace` where the periodic part starts.
    pub cycle_entry: Option<usize>,
    pub cycle_length: Option<usize>,
    /// `[x, _0 y], [x, _1 y], …` without the repeated element.
    pub trace: Vec<Permutation>,
}

impl EngelOutcome {
    pub fn is_engel(&self) -> bool {
        self.degree.is_some()
    }
}

/// Exact Engel degree `n(x, y)` or a certificate that none exists.
///
/// The orbit of `c ↦ [c, y]` in a finite group is eventually periodic, and
/// once it reaches the identity it stays there, so the search stops at the
/// identity or at the first repeat.
pub fn engel_outcome(x: &Permutation, y: &Permutation) -> EngelOutcome {
    let mut seen: BTreeMap<Permutation, usize> = BTreeMap::new();
    let mut trace = Vec::new();
    let mut c = x.clone();
    loop {
        if c.is_identity() {
            let degree = trace.len();
            trace.push(c);
            return EngelOutcome { degree: Some(degree), cycle_entry: None, cycle_length: None, trace };
        }
        if let Some(&entry) = seen.get(&c) {
            return EngelOutcome {
                degree: None,
                cycle_entry: Some(entry),
                cycle_length: Some(trace.len() - entry),
                trace,
            };
        }
        seen.insert(c.clone(), trace.len());
        let next = comm(&c, y);
        trace.push(c);
        c = next;
    }
}

/// The degree reported by [`engel_outcome`], without keeping the trace.
pub fn engel_degree(x: &Permutation, y: &Permutation) -> Option<usize> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut c = x.clone();
    let mut n = 0;
    loop {
        if c.is_identity() {
            return Some(n);
        }
        let next = comm(&c, y);
        if !seen.insert(c) {
            return None;
        }
        c = next;
        n += 1;
    }
}

/// Degrees `n(x, y)` and `n(y, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MutualEngel {
    pub forward: Option<usize>,
    pub backward: Option<usize>,
}

impl MutualEngel {
    pub fn is_mutual(&self) -> bool {
        self.forward.is_some() && self.backward.is_some()
    }

    /// `max(n, m)` when both degrees exist: the pair is mutually this-Engel.
    pub fn mutual_degree(&self) -> Option<usize> {
        Some(self.forward?.max(self.backward?))
    }

    /// `[x, _n y] = [y, _n x] = 1`.
    pub fn within(&self, n: usize) -> bool {
        self.mutual_degree().is_some_and(|d| d <= n)
    }
}

pub fn mutual_engel(x: &Permutation, y: &Permutation) -> MutualEngel {
    MutualEngel { forward: engel_degree(x, y), backward: engel_degree(y, x) }
}

/// Outcome of checking every ordered pair of a set.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EngelSetReport {
    pub is_engel_set: bool,
    /// `degrees[i][j] = n(s_i, s_j)`.
    pub degrees: Vec<Vec<Option<usize>>>,
    /// First failing ordered pair with its cycle certificate.
    pub failure: Option<(usize, usize, EngelOutcome)>,
}

pub fn is_engel_set(set: &[Permutation]) -> EngelSetReport {
    let mut degrees = vec![vec![None; set.len()]; set.len()];
    let mut failure = None;
    for (i, x) in set.iter().enumerate() {
        for (j, y) in set.iter().enumerate() {
            let outcome = engel_outcome(x, y);
            degrees[i][j] = outcome.degree;
            if outcome.degree.is_none() && failure.is_none() {
                failure = Some((i, j, outcome));
            }
        }
    }
    EngelSetReport { is_engel_set: failure.is_none(), degrees, failure }
}

/// `[x, y⁻¹, z]^y · [y, z⁻¹, x]^z · [z, x⁻¹, y]^x`, the identity in every group.
pub fn hall_witt_residual(x: &Permutation, y: &Permutation, z: &Permutation) -> Permutation {
    let term = |a: &Permutation, b: &Permutation, c: &Permutation| comm(&comm(a, &b.inverse()), c).conjugate(b);
    term(x, y, z).compose(&term(y, z, x)).compose(&term(z, x, y))
}

/// Checks, in a metabelian group,
/// `[x⁻¹, _n y] = ([x, _n y]⁻¹)^{x⁻¹}` and
/// `[xy, _n z] = [x, _n z] · [x, _n z, y] · [y, _n z]`.
pub fn metabelian_identity_check(
    group: &Group,
    x: &Permutation,
    y: &Permutation,
    z: &Permutation,
    n: usize,
) -> Result<(bool, bool)> {
    if n == 0 {
        return Err(Error::ZeroWeight);
    }
    let derived = series::derived_series(group);
    if !derived.terminated_trivial || derived.class_or_length.is_some_and(|l| l > 2) {
        return Err(Error::NotMetabelian(derived.class_or_length));
    }
    for e in [x, y, z] {
        if !group.contains(e)? {
            return Err(Error::NotMember(e.to_string()));
        }
    }
    Ok(metabelian_identities_hold(x, y, z, n))
}

/// Both sides of the two metabelian identities, without the precondition.
pub fn metabelian_identities_hold(x: &Permutation, y: &Permutation, z: &Permutation, n: usize) -> (bool, bool) {
    let x_inv = x.inverse();
    let first = left_normed(&x_inv, y, n) == left_normed(x, y, n).inverse().conjugate(&x_inv);
    let xz = left_normed(x, z, n);
    let rhs = xz.compose(&comm(&xz, y)).compose(&left_normed(y, z, n));
    let second = left_normed(&x.compose(y), z, n) == rhs;
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn example_pair() -> (Permutation, Permutation) {
        (p("(1,2,3,4)(5,6)(7,8)"), p("(1,3)(2,5)(4,7,6,8)"))
    }

    #[test]
    fn commutator_conventions() {
        let a = p("(1,2,3)");
        assert!(comm(&a, &a).is_identity());
        let (x, y) = example_pair();
        assert_eq!(comm(&x, &y), p("(1,6)(2,7)(3,8)(4,5)"));
        let direct = x.inverse().compose(&y.inverse()).compose(&x).compose(&y);
        assert_eq!(comm(&x, &y), direct);
        assert_eq!(comm(&x, &y).inverse(), comm(&y, &x));
    }

    #[test]
    fn left_normed_table_entries() {
        let (x, y) = example_pair();
        assert_eq!(left_normed(&x, &y, 0), x);
        assert_eq!(left_normed(&x, &y, 2), p("(1,5)(4,6)"));
        assert_eq!(left_normed(&y, &x, 3), p("(1,3)(2,4)(5,7)(6,8)"));
        assert_eq!(comm_seq(&[&x, &y, &y]), left_normed(&x, &y, 2));
    }

    #[test]
    fn engel_outcomes() {
        let (x, y) = example_pair();
        let fwd = engel_outcome(&x, &y);
        assert_eq!(fwd.degree, Some(4));
        assert_eq!(fwd.trace.len(), 5);
        assert!(!fwd.trace[3].is_identity());
        assert_eq!(engel_outcome(&y, &x).degree, Some(4));
        assert_eq!(engel_outcome(&Permutation::identity(3), &p("(1,2)")).degree, Some(0));

        let cyc = engel_outcome(&p("(1,2)"), &p("(2,3)"));
        assert_eq!(cyc.degree, None);
        assert_eq!(cyc.cycle_entry, Some(1));
        assert_eq!(cyc.cycle_length, Some(1));
        assert_eq!(cyc.trace, [p("(1,2)"), p("(1,2,3)")]);
        assert!(cyc.trace.iter().all(|c| !c.is_identity()));
        assert_eq!(engel_degree(&p("(1,2)"), &p("(2,3)")), None);
        assert_eq!(engel_degree(&x, &y), Some(4));
    }

    #[test]
    fn mutual_degrees() {
        let (x, y) = example_pair();
        let m = mutual_engel(&x, &y);
        assert_eq!(m.mutual_degree(), Some(4));
        assert!(m.within(4) && !m.within(3));
        let c = mutual_engel(&p("(1,2)"), &p("(3,4)"));
        assert_eq!((c.forward, c.backward), (Some(1), Some(1)));
        let t = mutual_engel(&Permutation::identity(2), &p("(1,2)"));
        assert_eq!((t.forward, t.backward), (Some(0), Some(1)));
    }

    #[test]
    fn engel_sets() {
        let (x, y) = example_pair();
        let r = is_engel_set(&[x, y]);
        assert!(r.is_engel_set);
        assert!(r.degrees.iter().flatten().all(|d| d.is_some_and(|d| d <= 4)));
        let r = is_engel_set(&[p("(1,2)"), p("(2,3)")]);
        assert!(!r.is_engel_set);
        let (i, j, outcome) = r.failure.unwrap();
        assert_eq!((i, j), (0, 1));
        assert!(outcome.cycle_length.is_some());
        let r = is_engel_set(&[p("(1,2)"), p("(3,4,5)"), p("(6,7)")]);
        assert!(r.is_engel_set);
        assert!(r.degrees.iter().flatten().all(|d| d.is_some_and(|d| d <= 1)));
    }

    #[test]
    fn hall_witt_on_small_cases() {
        let (x, y) = example_pair();
        assert!(hall_witt_residual(&x, &y, &p("(2,7,3)")).is_identity());
        assert!(hall_witt_residual(&Permutation::identity(8), &x, &y).is_identity());
    }

    #[test]
    fn metabelian_precondition() {
        let s4 = Group::from_generators([p("(1,2)"), p("(1,2,3,4)")]).unwrap();
        let e = p("(1,2)");
        assert!(matches!(metabelian_identity_check(&s4, &e, &e, &e, 1), Err(Error::NotMetabelian(Some(3)))));
        let ab = Group::from_generators([p("(1,2)"), p("(3,4,5)")]).unwrap();
        assert_eq!(metabelian_identity_check(&ab, &p("(1,2)"), &p("(3,4,5)"), &p("(3,5,4)"), 2), Ok((true, true)));
        assert_eq!(metabelian_identity_check(&ab, &e, &e, &e, 0), Err(Error::ZeroWeight));
    }
}
