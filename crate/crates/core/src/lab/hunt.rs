//! Hunt for non-nilpotent groups generated by two `p`-elements whose
//! commutator is again a `p`-element.
//!
//! If `x ∈ P`, `y ∈ Q` for Sylow `p`-subgroups with `[x, y] ∈ P ∩ Q`, then
//! `x` and `y` are mutually `(c+1)`-Engel where `c` is the class of `P`, and
//! `⟨x, y⟩` is non-nilpotent as soon as `xy` is not a `p`-element. The scan
//! relaxes the Sylow condition to "`x`, `y` and `[x, y]` are `p`-elements"
//! and then checks, for every hit, whether suitable Sylow subgroups exist.

use alloc::{collections::BTreeSet, string::String, vec, vec::Vec};

use super::{span::pair_classes, Executor};
use crate::{
    commutator::{comm, mutual_engel, MutualEngel},
    error::Error,
    group::{is_prime, EnumerationCap, Group},
    perm::Permutation,
    Result,
};

fn is_p_element(g: &Permutation, p: u64) -> bool {
    is_p_power(g.order(), p)
}

fn is_p_power(mut n: u128, p: u64) -> bool {
    while n.is_multiple_of(p as u128) {
        n /= p as u128;
    }
    n == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct HuntHit {
    pub x: Permutation,
    pub y: Permutation,
    pub commutator: Permutation,
    pub degrees: MutualEngel,
    pub xy_is_p_element: bool,
    pub span_order: u128,
    /// Sylow subgroups `P ∋ x` and `Q ∋ y` with `[x, y] ∈ P ∩ Q` exist.
    pub joint_sylow_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct HuntReport {
    pub group_order: u128,
    pub prime: u64,
    pub p_elements: usize,
    /// Pairs of nontrivial `p`-elements, up to simultaneous conjugation.
    pub pairs_scanned: usize,
    /// Pairs whose commutator is a `p`-element.
    pub qualifying_pairs: usize,
    pub mutually_engel_pairs: usize,
    pub nilpotent_spans: usize,
    /// Qualifying pairs with a non-nilpotent span, Engel or not.
    pub nonnilpotent_spans: usize,
    /// Qualifying, mutually Engel pairs with a non-nilpotent span.
    pub hits: Vec<HuntHit>,
    pub sylow_subgroups: usize,
    pub notes: Vec<String>,
}

struct PairData {
    degrees: MutualEngel,
    xy_is_p_element: bool,
    span_order: u128,
}

pub fn sylow_engel_hunt<E: Executor>(group: &Group, p: u64, cap: EnumerationCap, exec: &E) -> Result<HuntReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let elements = group.elements(cap)?;
    let p_elements: Vec<Permutation> =
        elements.iter().filter(|g| !g.is_identity() && is_p_element(g, p)).cloned().collect();
    let classes = pair_classes(group, cap, |x| !x.is_identity() && is_p_element(x, p), &p_elements)?;
    let pairs: Vec<(Permutation, Permutation)> =
        classes.iter().flat_map(|c| c.ys.iter().map(|y| (c.x.clone(), y.clone()))).collect();

    let degree = group.degree();
    let data = exec.map(&pairs, |(x, y)| {
        if !is_p_element(&comm(x, y), p) {
            return None;
        }
        // a nilpotent group generated by p-elements is a p-group
        let span_order = Group::generated_by(degree, [x, y]).order();
        Some(PairData { degrees: mutual_engel(x, y), xy_is_p_element: is_p_element(&x.compose(y), p), span_order })
    });

    let qualifying = data.iter().flatten().count();
    let mutually_engel_pairs = data.iter().flatten().filter(|d| d.degrees.is_mutual()).count();
    let nilpotent_spans = data.iter().flatten().filter(|d| is_p_power(d.span_order, p)).count();
    let mut hits: Vec<HuntHit> = pairs
        .iter()
        .zip(&data)
        .filter_map(|((x, y), d)| {
            let d = d.as_ref()?;
            (d.degrees.is_mutual() && !is_p_power(d.span_order, p)).then(|| HuntHit {
                x: x.clone(),
                y: y.clone(),
                commutator: comm(x, y),
                degrees: d.degrees,
                xy_is_p_element: d.xy_is_p_element,
                span_order: d.span_order,
                joint_sylow_verified: false,
            })
        })
        .collect();

    let mut sylow_count = 0;
    if !hits.is_empty() {
        let sylows = all_sylow_subgroups(group, p, cap)?;
        sylow_count = sylows.len();
        let verified = exec.map(&hits, |h| {
            let fits = |a: &Permutation| {
                sylows.iter().any(|s| s.binary_search(a).is_ok() && s.binary_search(&h.commutator).is_ok())
            };
            fits(&h.x) && fits(&h.y)
        });
        for (h, v) in hits.iter_mut().zip(verified) {
            h.joint_sylow_verified = v;
        }
    }

    Ok(HuntReport {
        group_order: group.order(),
        prime: p,
        p_elements: p_elements.len(),
        pairs_scanned: pairs.len(),
        qualifying_pairs: qualifying,
        mutually_engel_pairs,
        nilpotent_spans,
        nonnilpotent_spans: qualifying - nilpotent_spans,
        hits,
        sylow_subgroups: sylow_count,
        notes: vec![
            String::from("x, y and [x, y] are required to be p-elements; joint_sylow_verified marks hits where Sylow subgroups P ∋ x, Q ∋ y with [x, y] ∈ P ∩ Q were found"),
            String::from("pairs enumerated up to simultaneous conjugation"),
        ],
    })
}

/// Every Sylow `p`-subgroup as a sorted element list.
fn all_sylow_subgroups(group: &Group, p: u64, cap: EnumerationCap) -> Result<Vec<Vec<Permutation>>> {
    let sylow = group.sylow_subgroup(p, cap)?;
    let base = sylow.elements(cap)?;
    let mut seen = BTreeSet::new();
    for g in group.elements(cap)? {
        let mut conj: Vec<Permutation> = base.iter().map(|s| s.conjugate(g)).collect();
        conj.sort_unstable();
        seen.insert(conj);
    }
    Ok(seen.into_iter().collect())
}
