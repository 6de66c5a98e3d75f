//! Executable checks of the structural facts behind the enumeration.
//!
//! Each check takes a concrete instance and reports whether the claimed
//! object (a small witness, a contained side, an uncrossed partition with a
//! bounded count) exists. Hypotheses are normally mined from random corpora,
//! see [`crate::verify`].

mod uncross;
mod witness;

pub use uncross::{
    aggregate, check_uncrossing_lemma, minimum_uncrossing_cuts, sigma, uncross, Aggregation, SigmaBreakdown,
    UncrossedPartition, UncrossingVerdict,
};
pub use witness::{
    check_containment_lemma, check_unique_terminal_witness, check_unique_terminal_witness_with_opt,
    find_witness_general, find_witness_k2, ContainmentVerdict, UniqueWitnessVerdict, Witness,
};
