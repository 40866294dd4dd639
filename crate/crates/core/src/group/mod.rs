//! Permutation groups given by generators.

mod chain;
mod classes;
mod sylow;

use alloc::{boxed::Box, string::ToString, vec::Vec};
use core::fmt;

use once_cell::race::OnceBox;

use self::chain::StabChain;
pub use self::{
    classes::{conjugation_orbits, ConjugacyClass},
    sylow::{is_prime, p_part, prime_divisors},
};
use crate::{error::Error, perm::Permutation, Result};

/// Upper bound on the number of elements any operation may enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnumerationCap {
    pub max_elements: usize,
}

impl EnumerationCap {
    pub const DEFAULT: Self = Self { max_elements: 250_000 };

    pub fn new(max_elements: usize) -> Self {
        Self { max_elements: max_elements.max(1) }
    }
}

impl Default for EnumerationCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// A permutation group with a stabilizer chain built at construction and a
/// lazily filled element list.
///
/// The handle is `Sync`: the element cache is written at most once.
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
    elements: OnceBox<Vec<Permutation>>,
}

impl Group {
    pub fn from_generators<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Permutation>,
    {
        let gens: Vec<Permutation> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1);
        Self::with_degree(degree, gens)
    }

    /// Like [`Group::from_generators`] but on at least `degree` points. An
    /// empty generator list gives the trivial group.
    pub fn with_degree(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        let degree = gens.iter().map(Permutation::degree).max().unwrap_or(1).max(degree).max(1);
        let mut generators: Vec<Permutation> = gens.iter().map(|g| g.embed(degree)).collect();
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        let mut chain = StabChain::new(degree);
        for g in &generators {
            chain.extend(g);
        }
        let order = chain.order().ok_or(Error::OrderOverflow)?;
        Ok(Self { degree, generators, chain, order, elements: OnceBox::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::with_degree(degree, Vec::new()).expect("trivial group")
    }

    /// Subgroup generated by the given members of a sorted element list;
    /// the list becomes the element cache.
    fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut chain = StabChain::new(degree);
        let mut generators = Vec::new();
        for e in &elements {
            if chain.extend(e) {
                generators.push(e.clone());
            }
        }
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        let order = chain.order().expect("subgroup of an enumerated group");
        debug_assert_eq!(order, elements.len() as u128);
        let cache = OnceBox::new();
        let _ = cache.set(Box::new(elements));
        Self { degree, generators, chain, order, elements: cache }
    }

    /// Subgroup of `self` generated by `gens`, which must be members.
    pub fn subgroup<I>(&self, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Permutation>,
    {
        let gens: Vec<Permutation> = gens.into_iter().collect();
        for g in &gens {
            if !self.contains(g)? {
                return Err(Error::NotMember(g.to_string()));
            }
        }
        Self::with_degree(self.degree, gens)
    }

    /// Group generated by `gens` with redundant generators skipped.
    pub fn generated_by<'a, I>(degree: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut chain = StabChain::new(degree);
        let mut generators = Vec::new();
        for g in gens {
            let g = g.embed(degree);
            if chain.extend(&g) {
                generators.push(g);
            }
        }
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        let order = chain.order().expect("order overflow");
        Self { degree, generators, chain, order, elements: OnceBox::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators other than the identity.
    pub fn nontrivial_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.generators.iter().filter(|g| !g.is_identity())
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Base points of the stabilizer chain, 0-based.
    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    /// Membership by sifting. Fails if `p` moves a point beyond the degree.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if let Some(point) = p.largest_moved_point() {
            if point >= self.degree {
                return Err(Error::DegreeMismatch { point: point + 1, degree: self.degree });
            }
        }
        Ok(self.chain.contains(p))
    }

    /// Membership that treats out-of-range elements as non-members.
    pub fn has(&self, p: &Permutation) -> bool {
        match p.largest_moved_point() {
            Some(point) if point >= self.degree => false,
            _ => self.chain.contains(p),
        }
    }

    fn check_cap(&self, cap: EnumerationCap) -> Result<()> {
        if self.order > cap.max_elements as u128 {
            return Err(Error::CapExceeded { order: self.order, cap: cap.max_elements });
        }
        Ok(())
    }

    /// All elements, sorted lexicographically by image sequence.
    pub fn elements(&self, cap: EnumerationCap) -> Result<&[Permutation]> {
        self.check_cap(cap)?;
        Ok(self.elements.get_or_init(|| {
            let mut all = self.chain.all_elements();
            all.sort_unstable();
            Box::new(all)
        }))
    }

    /// Position of `p` in [`Group::elements`].
    pub fn index_of(&self, p: &Permutation, cap: EnumerationCap) -> Result<Option<usize>> {
        Ok(self.elements(cap)?.binary_search(p).ok())
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<&Permutation> = self.nontrivial_generators().collect();
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Subgroup of enumerated elements satisfying `keep`.
    pub fn filter_subgroup<F>(&self, cap: EnumerationCap, keep: F) -> Result<Self>
    where
        F: Fn(&Permutation) -> bool,
    {
        let kept: Vec<Permutation> = self.elements(cap)?.iter().filter(|g| keep(g)).cloned().collect();
        Ok(Self::from_sorted_elements(self.degree, kept))
    }

    /// `C_G(p)` by scanning the elements.
    pub fn centralizer(&self, p: &Permutation, cap: EnumerationCap) -> Result<Self> {
        let p = p.embed(self.degree);
        self.filter_subgroup(cap, |g| g.compose(&p) == p.compose(g))
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer_of_set(&self, set: &[Permutation], cap: EnumerationCap) -> Result<Self> {
        self.filter_subgroup(cap, |g| set.iter().all(|s| g.compose(s) == s.compose(g)))
    }

    /// `Z(G)`, the centralizer of the generators.
    pub fn center(&self, cap: EnumerationCap) -> Result<Self> {
        let gens: Vec<Permutation> = self.nontrivial_generators().cloned().collect();
        self.centralizer_of_set(&gens, cap)
    }

    /// `N_G(H)` by scanning the elements of `self`.
    pub fn normalizer(&self, h: &Group, cap: EnumerationCap) -> Result<Self> {
        let gens: Vec<&Permutation> = h.nontrivial_generators().collect();
        self.filter_subgroup(cap, |g| gens.iter().all(|s| h.has(&s.conjugate(g))))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<Self> {
        for s in seeds {
            if !self.contains(s)? {
                return Err(Error::NotMember(s.to_string()));
            }
        }
        Ok(self.normal_closure_of_members(seeds))
    }

    /// Normal closure of elements already known to lie in `self`.
    pub(crate) fn normal_closure_of_members(&self, seeds: &[Permutation]) -> Self {
        let mut chain = StabChain::new(self.degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for s in seeds {
            let s = s.embed(self.degree);
            if chain.extend(&s) {
                gens.push(s);
            }
        }
        let conjugators: Vec<&Permutation> = self.nontrivial_generators().collect();
        let mut next = 0;
        while next < gens.len() {
            let h = gens[next].clone();
            next += 1;
            for g in &conjugators {
                let c = h.conjugate(g);
                if chain.extend(&c) {
                    gens.push(c);
                }
            }
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree));
        }
        let order = chain.order().expect("subgroup order bounded by ambient order");
        Self { degree: self.degree, generators: gens, chain, order, elements: OnceBox::new() }
    }

    /// Every generator of `h` lies in `self`.
    pub fn is_subgroup(&self, h: &Group) -> bool {
        h.generators.iter().all(|g| self.has(g))
    }

    /// Whether `h ⊴ self`. Fails if `h` is not a subgroup.
    pub fn is_normal(&self, h: &Group) -> Result<bool> {
        if !self.is_subgroup(h) {
            return Err(Error::NotSubgroup);
        }
        Ok(h.nontrivial_generators().all(|a| self.nontrivial_generators().all(|g| h.has(&a.conjugate(g)))))
    }

    /// Same subgroup: mutual containment with equal orders.
    pub fn is_same(&self, h: &Group) -> bool {
        self.order == h.order && self.is_subgroup(h) && h.is_subgroup(self)
    }
}

impl Clone for Group {
    fn clone(&self) -> Self {
        let elements = OnceBox::new();
        if let Some(cached) = self.elements.get() {
            let _ = elements.set(Box::new(cached.clone()));
        }
        Self {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            order: self.order,
            elements,
        }
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}
