//! Lower central and derived series.
//!
//! `γ_1 = G` and `γ_{k+1}` is the normal closure in `G` of the commutators
//! of generators of `γ_k` with generators of `G`. The derived series uses
//! `H' = ⟨[a, b]⟩^H` over generators `a, b` of `H`. A series stops when two
//! consecutive terms have equal order.

use alloc::vec::Vec;

use crate::{commutator::comm, group::Group, perm::Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Orders of the distinct terms, strictly decreasing.
    pub subgroup_orders: Vec<u128>,
    pub terminated_trivial: bool,
    /// Nilpotency class or derived length; present iff the series reaches 1.
    pub class_or_length: Option<usize>,
}

/// The terms of a series together with its summary.
#[derive(Clone, Debug)]
pub struct Series {
    pub terms: Vec<Group>,
    pub report: SeriesReport,
}

impl Series {
    fn build(kind: SeriesKind, group: &Group, step: impl Fn(&Group) -> Group) -> Self {
        let mut terms = alloc::vec![group.clone()];
        loop {
            let last = terms.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = step(last);
            if next.order() == last.order() {
                break;
            }
            terms.push(next);
        }
        let terminated_trivial = terms.last().unwrap().is_trivial();
        let report = SeriesReport {
            kind,
            subgroup_orders: terms.iter().map(Group::order).collect(),
            terminated_trivial,
            class_or_length: terminated_trivial.then(|| terms.len() - 1),
        };
        Self { terms, report }
    }

    /// Term `k` counted from 1 (`term(1) = G`); past the end the last,
    /// stable term is returned.
    pub fn term(&self, k: usize) -> &Group {
        let idx = k.max(1) - 1;
        &self.terms[idx.min(self.terms.len() - 1)]
    }
}

pub fn lower_central(group: &Group) -> Series {
    let top: Vec<Permutation> = group.nontrivial_generators().cloned().collect();
    Series::build(SeriesKind::LowerCentral, group, |term| {
        let seeds: Vec<Permutation> = term
            .nontrivial_generators()
            .flat_map(|a| top.iter().map(move |s| comm(a, s)))
            .filter(|c| !c.is_identity())
            .collect();
        group.normal_closure_of_members(&seeds)
    })
}

pub fn derived(group: &Group) -> Series {
    Series::build(SeriesKind::Derived, group, derived_subgroup)
}

/// `H' = [H, H]`.
pub fn derived_subgroup(group: &Group) -> Group {
    let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
    let seeds: Vec<Permutation> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, a)| gens[i + 1..].iter().map(move |b| comm(a, b)))
        .filter(|c| !c.is_identity())
        .collect();
    group.normal_closure_of_members(&seeds)
}

pub fn lower_central_series(group: &Group) -> SeriesReport {
    lower_central(group).report
}

pub fn derived_series(group: &Group) -> SeriesReport {
    derived(group).report
}

/// `γ_k(G)`, with `γ_1 = G`.
pub fn gamma(group: &Group, k: usize) -> Group {
    lower_central(group).term(k).clone()
}

pub fn nilpotency_class(group: &Group) -> Option<usize> {
    lower_central(group).report.class_or_length
}

pub fn is_nilpotent(group: &Group) -> bool {
    nilpotency_class(group).is_some()
}

pub fn derived_length(group: &Group) -> Option<usize> {
    derived(group).report.class_or_length
}

pub fn is_soluble(group: &Group) -> bool {
    derived_length(group).is_some()
}

/// `G'` is abelian.
pub fn is_metabelian(group: &Group) -> bool {
    derived_subgroup(group).is_abelian()
}

/// `G'` is nilpotent. Any normal `N` with `G/N` abelian contains `G'`, and
/// `G/G'` is abelian, so this is exactly nilpotent-by-abelian.
pub fn is_nilpotent_by_abelian(group: &Group) -> bool {
    is_nilpotent(&derived_subgroup(group))
}

/// `γ_{c+1}(G)` is abelian, i.e. `G` is abelian-by-(nilpotent of class ≤ c).
///
/// If `A ⊴ G` is abelian with `G/A` of class `≤ c` then `γ_{c+1}(G) ≤ A`;
/// conversely `γ_{c+1}(G)` itself is such an `A`.
pub fn is_abelian_by_class(group: &Group, class: usize) -> bool {
    lower_central(group).term(class + 1).is_abelian()
}
