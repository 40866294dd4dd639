#![allow(dead_code)]

use engel_core::{ConstructionSpec, EnumerationCap, Group, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CAP: EnumerationCap = EnumerationCap::DEFAULT;

pub fn build(spec: &str) -> Group {
    spec.parse::<ConstructionSpec>().unwrap().build().unwrap()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sample<'a>(g: &'a Group, rng: &mut impl Rng) -> &'a Permutation {
    let els = g.elements(CAP).unwrap();
    &els[rng.random_range(0..els.len())]
}

/// Closure of the generators under right multiplication, by breadth-first
/// search over a hash set. Independent of the stabilizer chain.
pub fn brute_force_elements(g: &Group) -> Vec<Permutation> {
    use std::collections::HashSet;
    let id = Permutation::identity(g.degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for s in g.generators() {
            let q = p.compose(s);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let mut v: Vec<_> = seen.into_iter().map(|p| p.embed(g.degree())).collect();
    v.sort();
    v
}

/// Lower central series by brute force on element sets: each term is the
/// closure of all commutators `[a, g]`.
pub fn brute_force_class(g: &Group) -> Option<usize> {
    let all = brute_force_elements(g);
    let degree = g.degree();
    let mut term = all.clone();
    let mut c = 0;
    loop {
        if term.len() == 1 {
            return Some(c);
        }
        let gens: Vec<Permutation> = term
            .iter()
            .flat_map(|a| all.iter().map(move |b| engel_core::comm(a, b)))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let next = brute_force_elements(&Group::with_degree(degree, gens).unwrap());
        if next.len() == term.len() {
            return None;
        }
        term = next;
        c += 1;
    }
}

pub fn is_p_power(mut n: u128, p: u128) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
