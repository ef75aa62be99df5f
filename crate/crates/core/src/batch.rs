//! Batch evaluation over many syllogisms.
//!
//! With the `parallel` feature (on by default) the batch entry points fan out
//! over rayon's global pool; the `*_sequential` variants are always available
//! and produce identical output in identical order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::diagram::{self, Verdict};
use crate::model::{enumerate_all, MalformedSyllogism, Mood, Syllogism};
use crate::semantics::{oracle_decide, OracleVerdict};

/// Decides every syllogism in order.
pub fn decide_batch_sequential(items: &[Syllogism]) -> Vec<Result<Verdict, MalformedSyllogism>> {
    items.iter().map(diagram::verdict).collect()
}

/// Same as [`decide_batch_sequential`], fanned out across threads.
#[cfg(feature = "parallel")]
pub fn decide_batch_parallel(items: &[Syllogism]) -> Vec<Result<Verdict, MalformedSyllogism>> {
    items.par_iter().map(diagram::verdict).collect()
}

pub fn decide_batch(items: &[Syllogism]) -> Vec<Result<Verdict, MalformedSyllogism>> {
    #[cfg(feature = "parallel")]
    {
        decide_batch_parallel(items)
    }
    #[cfg(not(feature = "parallel"))]
    {
        decide_batch_sequential(items)
    }
}

/// Counts valid syllogisms among `items`, skipping malformed ones.
pub fn count_valid_sequential(items: &[&Syllogism]) -> usize {
    items
        .iter()
        .filter(|s| matches!(diagram::verdict(s), Ok(Verdict::Valid)))
        .count()
}

#[cfg(feature = "parallel")]
pub fn count_valid_parallel(items: &[&Syllogism]) -> usize {
    items
        .par_iter()
        .filter(|s| matches!(diagram::verdict(s), Ok(Verdict::Valid)))
        .count()
}

/// One row of the full 256-mood sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub mood: Mood,
    pub syllogism: Syllogism,
    pub verdict: Verdict,
    pub oracle: OracleVerdict,
}

impl SweepRow {
    pub fn agrees(&self) -> bool {
        self.verdict.is_valid() == self.oracle.valid
    }
}

fn sweep_row(s: Syllogism) -> SweepRow {
    let verdict = diagram::verdict(&s).expect("enumerated syllogisms are standard form");
    let oracle = oracle_decide(&s);
    SweepRow {
        mood: s.mood().expect("standard form"),
        syllogism: s,
        verdict,
        oracle,
    }
}

/// Decider and oracle over all 256 moods, in enumeration order.
pub fn sweep_sequential() -> Vec<SweepRow> {
    enumerate_all().into_iter().map(sweep_row).collect()
}

#[cfg(feature = "parallel")]
pub fn sweep_parallel() -> Vec<SweepRow> {
    enumerate_all().into_par_iter().map(sweep_row).collect()
}

pub fn sweep() -> Vec<SweepRow> {
    #[cfg(feature = "parallel")]
    {
        sweep_parallel()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential()
    }
}
