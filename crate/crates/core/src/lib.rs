//! Deterministic enumeration of minimum k-cut-sets in hypergraphs.
//!
//! The enumeration works entirely through source-minimal minimum
//! `(S, T)`-terminal cuts with small terminal sets: every minimum k-cut-set
//! either appears directly as the crossing set of such a cut, or is the
//! crossing set of a k-partition whose parts all appear as source sides.
//!
//! Modules:
//! - [`hypergraph`]: data model and cut-function primitives.
//! - [`flow`]: exact minimum terminal cuts.
//! - [`enumerate`]: the enumeration algorithm and the faster k = 2 path.
//! - [`oracle`]: exhaustive reference implementations.
//! - [`structure`]: executable checks of the structural results the
//!   enumeration relies on.
//! - [`verify`]: mining of hypotheses from random corpora for those checks.
//! - [`io`]: instance files, generators and JSON reports.

pub mod enumerate;
pub mod error;
pub mod flow;
pub mod hypergraph;
pub mod io;
pub mod oracle;
pub mod structure;
mod subsets;
pub mod verify;

pub use enumerate::{enum_min_cutsets_k2, enum_min_k_cutsets, min_k_cut_value, EnumerationReport, Stats};
pub use error::{Error, Result};
pub use flow::{min_terminal_cut, min_terminal_cut_value, TerminalCut, TerminalCutSolver};
pub use hypergraph::{CutSet, Hyperedge, Hypergraph, VertexPartition, VertexSet};
