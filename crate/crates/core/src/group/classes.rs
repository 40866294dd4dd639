use alloc::vec::Vec;

use super::{EnumerationCap, Group};
use crate::{perm::Permutation, Result};

/// A conjugacy class; `members` index into [`Group::elements`] and the
/// representative is the least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Orbits of `⟨acting⟩` on a sorted list `items` under conjugation.
///
/// `items` must be closed under conjugation by each acting element. Orbits
/// are sorted index lists, ordered by their least index.
pub fn conjugation_orbits(acting: &[Permutation], items: &[Permutation]) -> Vec<Vec<usize>> {
    let acting: Vec<&Permutation> = acting.iter().filter(|g| !g.is_identity()).collect();
    let mut seen = alloc::vec![false; items.len()];
    let mut orbits = Vec::new();
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = alloc::vec![start];
        let mut next = 0;
        while next < orbit.len() {
            let current = &items[orbit[next]];
            next += 1;
            for g in &acting {
                let image = current.conjugate(g);
                match items.binary_search(&image) {
                    Ok(idx) => {
                        if !seen[idx] {
                            seen[idx] = true;
                            orbit.push(idx);
                        }
                    }
                    Err(_) => debug_assert!(false, "item set not closed under conjugation"),
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

impl Group {
    /// Conjugacy classes in order of their least element.
    pub fn conjugacy_classes(&self, cap: EnumerationCap) -> Result<Vec<ConjugacyClass>> {
        let elements = self.elements(cap)?;
        Ok(conjugation_orbits(&self.generators, elements)
            .into_iter()
            .map(|members| ConjugacyClass { representative: elements[members[0]].clone(), members })
            .collect())
    }
}
