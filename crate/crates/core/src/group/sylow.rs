use alloc::vec::Vec;

use super::{EnumerationCap, Group};
use crate::{error::Error, perm::Permutation, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct primes dividing `n`, ascending.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as u64);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Order is a power of `p` (the identity counts).
pub(crate) fn is_p_element(g: &Permutation, p: u64) -> bool {
    let mut order = g.order();
    while order.is_multiple_of(p as u128) {
        order /= p as u128;
    }
    order == 1
}

impl Group {
    /// A Sylow `p`-subgroup, grown one `p`-element of the normalizer at a
    /// time. The first qualifying element in enumeration order is used, so
    /// the result is deterministic.
    pub fn sylow_subgroup(&self, p: u64, cap: EnumerationCap) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(self.order(), p);
        let elements = self.elements(cap)?;
        let candidates: Vec<&Permutation> =
            elements.iter().filter(|g| !g.is_identity() && is_p_element(g, p)).collect();
        let mut sylow = Group::trivial(self.degree());
        while sylow.order() < target {
            let gens: Vec<&Permutation> = sylow.nontrivial_generators().collect();
            let next = candidates
                .iter()
                .find(|g| !sylow.has(g) && gens.iter().all(|s| sylow.has(&s.conjugate(g))))
                .expect("a proper p-subgroup has a p-element in its normalizer outside it");
            let mut new_gens: Vec<Permutation> = gens.into_iter().cloned().collect();
            new_gens.push((*next).clone());
            sylow = Group::generated_by(self.degree(), &new_gens);
        }
        Ok(sylow)
    }

    /// Nilpotency via the Sylow criterion: every Sylow subgroup is normal.
    pub fn all_sylows_normal(&self, cap: EnumerationCap) -> Result<bool> {
        for p in prime_divisors(self.order()) {
            let sylow = self.sylow_subgroup(p, cap)?;
            if !self.is_normal(&sylow)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
