//! All `y` with `[x, _n y] = [y, _n x] = 1` for a fixed `x`, classified up to
//! conjugation by the centralizer of `x`.

use alloc::{string::ToString, vec::Vec};

use super::{decide_nilpotent, Executor, NilpotencyRoute};
use crate::{
    commutator::{left_normed, mutual_engel, MutualEngel},
    error::Error,
    group::{conjugation_orbits, EnumerationCap, Group},
    perm::{CycleType, Permutation},
    Result,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StarCondition {
    pub n: usize,
}

impl Default for StarCondition {
    fn default() -> Self {
        Self { n: 4 }
    }
}

impl StarCondition {
    pub fn holds(&self, x: &Permutation, y: &Permutation) -> bool {
        left_normed(x, y, self.n).is_identity() && left_normed(y, x, self.n).is_identity()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SpanFilter {
    All,
    /// Keep `y` only when `⟨x, y⟩` is not nilpotent.
    NonnilpotentSpan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StarSolution {
    pub y: Permutation,
    pub cycle_type: CycleType,
    pub degrees: MutualEngel,
    pub span_order: u128,
    pub span_nilpotent: bool,
    pub nilpotency_route: NilpotencyRoute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StarOrbit {
    pub representative: Permutation,
    pub size: usize,
    /// `|C_G(x) ∩ C_G(y)|` for the representative.
    pub stabilizer_order: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StarSearchReport {
    pub fixed_x: Permutation,
    pub ambient_order: u128,
    pub ambient_generators: Vec<Permutation>,
    pub condition: StarCondition,
    pub filter: SpanFilter,
    /// Solutions before filtering.
    pub unfiltered_count: usize,
    pub nilpotent_span_count: usize,
    /// Solutions passing the filter, in enumeration order.
    pub solutions: Vec<StarSolution>,
    pub centralizer_order: u128,
    pub orbits: Vec<StarOrbit>,
}

impl StarSearchReport {
    pub fn solution_count(&self) -> usize {
        self.solutions.len()
    }

    /// Orbit sizes sum to the solution count and each orbit size times its
    /// stabilizer order is the centralizer order.
    pub fn orbit_arithmetic_holds(&self) -> bool {
        self.orbits.iter().map(|o| o.size).sum::<usize>() == self.solutions.len()
            && self.orbits.iter().all(|o| o.size as u128 * o.stabilizer_order == self.centralizer_order)
    }
}

pub fn star_search<E: Executor>(
    group: &Group,
    x: &Permutation,
    condition: StarCondition,
    filter: SpanFilter,
    cap: EnumerationCap,
    exec: &E,
) -> Result<StarSearchReport> {
    if !group.contains(x)? {
        return Err(Error::NotMember(x.to_string()));
    }
    let x = x.embed(group.degree());
    let elements = group.elements(cap)?;
    let hits = exec.map(elements, |y| condition.holds(&x, y));
    let candidates: Vec<&Permutation> = elements.iter().zip(hits).filter_map(|(y, hit)| hit.then_some(y)).collect();
    let unfiltered_count = candidates.len();

    let degree = group.degree();
    let analysed = exec.map(&candidates, |y| -> Result<StarSolution> {
        let span = Group::generated_by(degree, [&x, *y]);
        let (span_nilpotent, nilpotency_route) = decide_nilpotent(&span, cap)?;
        Ok(StarSolution {
            y: (*y).clone(),
            cycle_type: y.cycle_type(),
            degrees: mutual_engel(&x, y),
            span_order: span.order(),
            span_nilpotent,
            nilpotency_route,
        })
    });
    let analysed: Vec<StarSolution> = analysed.into_iter().collect::<Result<_>>()?;
    let nilpotent_span_count = analysed.iter().filter(|s| s.span_nilpotent).count();
    let solutions: Vec<StarSolution> =
        analysed.into_iter().filter(|s| filter == SpanFilter::All || !s.span_nilpotent).collect();

    let centralizer = group.centralizer(&x, cap)?;
    let kept: Vec<Permutation> = solutions.iter().map(|s| s.y.clone()).collect();
    let centralizer_elements = centralizer.elements(cap)?;
    let orbits = conjugation_orbits(centralizer.generators(), &kept)
        .into_iter()
        .map(|orbit| {
            let representative = kept[orbit[0]].clone();
            let stabilizer_order =
                centralizer_elements.iter().filter(|c| c.compose(&representative) == representative.compose(c)).count()
                    as u128;
            StarOrbit { representative, size: orbit.len(), stabilizer_order }
        })
        .collect();

    Ok(StarSearchReport {
        fixed_x: x,
        ambient_order: group.order(),
        ambient_generators: group.generators().to_vec(),
        condition,
        filter,
        unfiltered_count,
        nilpotent_span_count,
        solutions,
        centralizer_order: centralizer.order(),
        orbits,
    })
}
