//! Machine-readable JSON reports.
//!
//! Key order is fixed by field order, so equal reports serialize to equal
//! bytes.

use serde::Serialize;

use crate::enumerate::EnumerationReport;
use crate::flow::TerminalCut;
use crate::hypergraph::VertexSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub k: usize,
    pub opt_value: u64,
    /// 0-indexed hyperedge ids, each list ascending, lists in lexicographic
    /// order.
    pub cut_sets: Vec<Vec<usize>>,
    pub stats: ReportStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportStats {
    pub terminal_cut_calls: u64,
    pub candidate_sets: u64,
    pub candidate_cutsets: u64,
    pub millis: u64,
}

impl ReportFile {
    /// With `timing = false` the elapsed time is written as 0, making the
    /// bytes a pure function of the input and flags.
    pub fn new(report: &EnumerationReport, timing: bool) -> Self {
        let mut cut_sets: Vec<Vec<usize>> = report.family.iter().map(|f| f.edge_ids().to_vec()).collect();
        cut_sets.sort();
        ReportFile {
            schema_version: SCHEMA_VERSION,
            k: report.k,
            opt_value: report.opt_value,
            cut_sets,
            stats: ReportStats {
                terminal_cut_calls: report.stats.terminal_cut_calls,
                candidate_sets: report.stats.candidate_sets,
                candidate_cutsets: report.stats.candidate_cutsets,
                millis: if timing { report.stats.millis } else { 0 },
            },
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalCutFile {
    pub schema_version: u32,
    pub sources: VertexSet,
    pub sinks: VertexSet,
    pub value: u64,
    pub source_minimal: VertexSet,
    pub source_maximal: VertexSet,
}

impl TerminalCutFile {
    pub fn new(sources: &VertexSet, sinks: &VertexSet, cut: &TerminalCut) -> Self {
        TerminalCutFile {
            schema_version: SCHEMA_VERSION,
            sources: sources.clone(),
            sinks: sinks.clone(),
            value: cut.value,
            source_minimal: cut.source_minimal.clone(),
            source_maximal: cut.source_maximal.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize infallibly");
    s.push('\n');
    s
}
