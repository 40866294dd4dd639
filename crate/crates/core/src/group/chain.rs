//! Deterministic Schreier–Sims stabilizer chain.
//!
//! Level `i` stores a base point, the strong generators fixing all earlier
//! base points, and a transversal of the orbit of its base point. New base
//! points are always the smallest point moved by the element that forces a
//! new level, so the chain depends only on the generator sequence.

use alloc::{vec, vec::Vec};

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) point: usize,
    pub(crate) gens: Vec<Permutation>,
    pub(crate) orbit: Vec<usize>,
    reps: Vec<Option<Permutation>>,
    rep_invs: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        Self { point, gens: Vec::new(), orbit: Vec::new(), reps: vec![None; degree], rep_invs: vec![None; degree] }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.reps.iter_mut().for_each(|r| *r = None);
        self.rep_invs.iter_mut().for_each(|r| *r = None);
        self.orbit.clear();
        let id = Permutation::identity(degree);
        self.reps[self.point] = Some(id.clone());
        self.rep_invs[self.point] = Some(id);
        self.orbit.push(self.point);
        let mut next = 0;
        while next < self.orbit.len() {
            let q = self.orbit[next];
            next += 1;
            for s in &self.gens {
                let r = s.image(q);
                if self.reps[r].is_none() {
                    let rep = self.reps[q].as_ref().unwrap().compose(s);
                    self.rep_invs[r] = Some(rep.inverse());
                    self.reps[r] = Some(rep);
                    self.orbit.push(r);
                }
            }
        }
    }

    /// Transversal element mapping the base point to `q`.
    pub(crate) fn rep(&self, q: usize) -> Option<&Permutation> {
        self.reps[q].as_ref()
    }

    fn rep_inv(&self, q: usize) -> Option<&Permutation> {
        self.rep_invs[q].as_ref()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn new(degree: usize) -> Self {
        Self { degree, levels: Vec::new() }
    }

    /// Divides out transversal elements from level `start` downwards.
    /// Returns the residue and the level at which sifting stopped.
    pub(crate) fn sift(&self, start: usize, g: &Permutation) -> (Permutation, usize) {
        let mut g = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let q = g.image(level.point);
            match level.rep_inv(q) {
                Some(inv) => g = g.compose(inv),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        self.sift(0, g).0.is_identity()
    }

    /// Adds `g` as a new generator of the whole group. Returns `false` when
    /// `g` was already a member.
    pub(crate) fn extend(&mut self, g: &Permutation) -> bool {
        if self.contains(g) {
            return false;
        }
        self.insert(0, g.embed(self.degree));
        true
    }

    /// `g` fixes the base points of levels `< i` and is not in the group
    /// described by levels `≥ i`.
    fn insert(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let point = g.smallest_moved_point().expect("inserted element is not the identity");
            self.levels.push(Level::new(point, self.degree));
        }
        let level = &mut self.levels[i];
        level.gens.push(g);
        level.rebuild_orbit(self.degree);

        let orbit = level.orbit.clone();
        let gens = level.gens.clone();
        for &q in &orbit {
            for s in &gens {
                let level = &self.levels[i];
                let r = s.image(q);
                let schreier = level.rep(q).unwrap().compose(s).compose(level.rep_inv(r).unwrap());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, _) = self.sift(i + 1, &schreier);
                if !residue.is_identity() {
                    self.insert(i + 1, residue);
                }
            }
        }
    }

    /// Product of the basic orbit lengths, or `None` on overflow.
    pub(crate) fn order(&self) -> Option<u128> {
        self.levels.iter().try_fold(1u128, |acc, level| acc.checked_mul(level.orbit.len() as u128))
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Every element as a product of transversal elements, unsorted.
    pub(crate) fn all_elements(&self) -> Vec<Permutation> {
        let mut elements = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.orbit.len());
            for h in &elements {
                for &q in &level.orbit {
                    next.push(h.compose(level.rep(q).unwrap()));
                }
            }
            elements = next;
        }
        elements
    }
}
