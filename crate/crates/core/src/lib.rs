//! Finite permutation groups and Engel commutator calculus.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`perm`]: permutations on `1..=degree`, cycle notation, cycle types
//! - [`group`]: groups given by generators, backed by a deterministic
//!   Schreier–Sims stabilizer chain, with enumeration, centralizers,
//!   normal closures, conjugacy classes and Sylow subgroups
//! - [`commutator`]: commutators, left-normed commutators `[x, _n y]`,
//!   exact Engel degrees by cycle detection, Hall–Witt and metabelian
//!   identity checks
//! - [`series`]: lower central and derived series and the structural
//!   predicates built on them
//! - [`construct`]: named groups (symmetric, alternating, cyclic,
//!   dihedral of 2-power order, direct and wreath products)
//! - [`lab`]: exhaustive Engel-pair searches, orbit classification and
//!   nilpotency criteria scanned over finite groups
//!
//! Conventions: permutations act on the right, so `a.compose(&b)` applies
//! `a` first. Commutators are `[a, b] = a⁻¹b⁻¹ab` and conjugation is
//! `a^b = b⁻¹ab`.

#![no_std]

extern crate alloc;

pub mod commutator;
pub mod construct;
mod error;
pub mod group;
pub mod lab;
pub mod perm;
pub mod series;

pub use crate::{
    commutator::{comm, engel_outcome, left_normed, mutual_engel, EngelOutcome},
    construct::ConstructionSpec,
    error::{Error, ParseError},
    group::{EnumerationCap, Group},
    perm::{CycleType, Permutation},
    series::SeriesReport,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
