//! Searches and nilpotency-criterion scans.
//!
//! Everything here is exhaustive over enumerated groups. Work that splits
//! into independent items goes through an [`Executor`], so callers with
//! threads can parallelize while results keep their input order.

mod examples;
mod hunt;
mod span;
mod star;
mod theorems;
mod wreath;

use alloc::vec::Vec;

pub use self::{
    examples::{reproduce_example, Check, ExampleId, ExampleReport},
    hunt::{sylow_engel_hunt, HuntHit, HuntReport},
    span::{decide_nilpotent, pair_orbit_representative, NilpotencyRoute, SMALL_SPAN},
    star::{star_search, SpanFilter, StarCondition, StarOrbit, StarSearchReport, StarSolution},
    theorems::{default_corpus, theorem_scan, theorem_scan_many, TheoremId, TheoremScanReport, Violation},
    wreath::{find_wreath_engel_pair, GeneratingPair, WreathPair, WreathPairReport},
};

/// Order-preserving map over independent work items.
pub trait Executor: Sync {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send;
}

/// Runs everything on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        items.iter().map(f).collect()
    }
}
