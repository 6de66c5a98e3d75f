//! Enumeration of all minimum k-cut-sets through terminal cuts.
//!
//! The general path runs a source-minimal minimum `(S, T)`-terminal cut for
//! every disjoint pair with `1 <= |S|, |T| <= 2k - 1`. A cut whose crossing
//! set already leaves `k` components contributes that crossing set to the
//! candidate family; otherwise its source side joins the candidate
//! collection. Every k-partition whose parts all come from the collection
//! then contributes its crossing set, and the cheapest members of the family
//! are returned.
//!
//! For `k = 2` a sink vertex can be fixed and sources of size at most two
//! suffice, which needs only `n(n-1)/2` terminal-cut computations.
//!
//! Both loops run on the current rayon pool. Per-chunk results are merged into
//! ordered sets, so the report is identical for any thread count.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::flow::{Flow, Scratch, TerminalCutSolver};
use crate::hypergraph::{CutSet, Hypergraph, VertexSet};
use crate::subsets::small_subsets;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub terminal_cut_calls: u64,
    /// Distinct source sides kept as partition candidates.
    pub candidate_sets: u64,
    /// Distinct cut-sets gathered before keeping the cheapest.
    pub candidate_cutsets: u64,
    pub millis: u64,
}

/// Outcome of an enumeration: the optimum and every cut-set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub k: usize,
    pub opt_value: u64,
    /// Sorted, duplicate-free.
    pub family: Vec<CutSet>,
    pub stats: Stats,
}

impl EnumerationReport {
    fn already_split(k: usize, started: Instant) -> Self {
        EnumerationReport {
            k,
            opt_value: 0,
            family: vec![CutSet::empty()],
            stats: Stats {
                millis: started.elapsed().as_millis() as u64,
                ..Stats::default()
            },
        }
    }
}

fn cheapest(family: &BTreeSet<CutSet>) -> (u64, Vec<CutSet>) {
    let opt = family
        .iter()
        .map(CutSet::total_cost)
        .min()
        .expect("candidate family contains at least one k-cut-set");
    let best = family.iter().filter(|f| f.total_cost() == opt).cloned().collect();
    (opt, best)
}

/// All minimum k-cut-sets of `graph`.
///
/// If the hypergraph already has at least `k` components the only minimum
/// k-cut-set is the empty one, reported with optimum 0.
pub fn enum_min_k_cutsets(graph: &Hypergraph, k: usize) -> Result<EnumerationReport> {
    let started = Instant::now();
    let n = graph.num_vertices();
    if k < 2 || k > n {
        return invalid(format!("k must lie in 2..={n}, got {k}"));
    }
    if graph.components().len() >= k {
        return Ok(EnumerationReport::already_split(k, started));
    }

    // no side of an optimal partition and no optimal cut-set costs more
    // than OPT_k, so cuts above an upper bound on it cannot matter
    let budget = if k == 2 {
        enum_min_cutsets_k2(graph)?.opt_value
    } else {
        singleton_split_cost(graph, k)
    };
    let solver = TerminalCutSolver::new(graph);
    let bound = 2 * k - 1;
    let vertices: Vec<usize> = (0..n).collect();
    let sink_sets = small_subsets(&vertices, bound);

    let chunks: Vec<(u64, Vec<CutSet>, Vec<VertexSet>)> = sink_sets
        .par_iter()
        .map(|t| {
            let sinks = VertexSet::from_vertices(n, t.iter().copied());
            let rest: Vec<usize> = vertices.iter().copied().filter(|&v| !sinks.contains(v)).collect();
            let mut calls = 0;
            let mut seen = HashSet::new();
            let mut cutsets = BTreeSet::new();
            let mut sides = BTreeSet::new();
            for_each_source_set(&solver, &sinks, &rest, bound, budget, &mut |side: &VertexSet| {
                calls += 1;
                if !seen.insert(side.clone()) {
                    return;
                }
                let crossing = graph.cut_set_unchecked(side);
                if graph.count_components_after_removal(&crossing) >= k {
                    cutsets.insert(crossing);
                } else {
                    sides.insert(side.clone());
                }
            });
            (calls, cutsets.into_iter().collect(), sides.into_iter().collect())
        })
        .collect();

    let mut calls = 0;
    let mut family = BTreeSet::new();
    let mut candidates = BTreeSet::new();
    for (c, cutsets, sides) in chunks {
        calls += c;
        family.extend(cutsets);
        candidates.extend(sides);
    }

    let candidates: Vec<VertexSet> = candidates.into_iter().collect();
    family.extend(partitions_from_candidates(graph, &candidates, k));

    let (opt_value, best) = cheapest(&family);
    Ok(EnumerationReport {
        k,
        opt_value,
        family: best,
        stats: Stats {
            terminal_cut_calls: calls,
            candidate_sets: candidates.len() as u64,
            candidate_cutsets: family.len() as u64,
            millis: started.elapsed().as_millis() as u64,
        },
    })
}

/// Cost of the k-partition that splits off the `k - 1` vertices of least
/// degree cost as singletons; an upper bound on `OPT_k`.
fn singleton_split_cost(graph: &Hypergraph, k: usize) -> u64 {
    let n = graph.num_vertices();
    let mut degree = vec![0u64; n];
    for e in graph.edges() {
        for &v in e.vertices() {
            degree[v] += e.cost();
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (degree[v], v));
    let mut labels = vec![k - 1; n];
    for (i, &v) in order.iter().take(k - 1).enumerate() {
        labels[v] = i;
    }
    graph.crossing_cost_of_labels(&labels)
}

/// Visits the source-minimal optimal side for every source set `S ⊆ rest`
/// with `1 <= |S| <= max_size`, in lexicographic order of `S`.
///
/// Children reuse their parent `S' = S \ {s}`: its maximum flow stays
/// feasible when a source is added, and source-minimal sides grow as sources
/// are added, so when `s` already lies in the parent's side that side is
/// the answer. The optimum never decreases as sources are added, so a source
/// set whose optimum exceeds `budget` is skipped together with all its
/// supersets.
fn for_each_source_set(
    solver: &TerminalCutSolver,
    sinks: &VertexSet,
    rest: &[usize],
    max_size: usize,
    budget: u64,
    visit: &mut impl FnMut(&VertexSet),
) {
    struct Walk<'a, 'g, F> {
        solver: &'a TerminalCutSolver<'g>,
        sinks: &'a VertexSet,
        rest: &'a [usize],
        budget: u64,
        sources: VertexSet,
        scratch: Scratch,
        visit: &'a mut F,
    }

    impl<F: FnMut(&VertexSet)> Walk<'_, '_, F> {
        fn go(&mut self, from: usize, left: usize, parent: &Flow, parent_side: Option<&VertexSet>) {
            for i in from..self.rest.len() {
                let v = self.rest[i];
                self.sources.insert(v);
                match parent_side.filter(|side| side.contains(v)) {
                    Some(side) => {
                        (self.visit)(side);
                        if left > 1 {
                            self.go(i + 1, left - 1, parent, Some(side));
                        }
                    }
                    None => {
                        let mut flow = parent.clone();
                        let side = self.solver.augment_with(&mut flow, &self.sources, self.sinks, &mut self.scratch);
                        if flow.value > self.budget {
                            self.sources.remove(v);
                            continue;
                        }
                        (self.visit)(&side);
                        if left > 1 {
                            self.go(i + 1, left - 1, &flow, Some(&side));
                        }
                    }
                }
                self.sources.remove(v);
            }
        }
    }

    if max_size == 0 {
        return;
    }
    let mut walk = Walk {
        solver,
        sinks,
        rest,
        budget,
        sources: VertexSet::empty(sinks.universe()),
        scratch: solver.scratch(),
        visit,
    };
    walk.go(0, max_size, &solver.zero_flow(), None);
}

/// Crossing sets of every k-partition of `V` whose parts are all members of
/// `candidates`.
///
/// Each unordered partition is produced once: the next part is always the
/// one containing the smallest uncovered vertex, so candidates are indexed by
/// their minimum, and the final part is looked up as the exact remainder.
fn partitions_from_candidates(graph: &Hypergraph, candidates: &[VertexSet], k: usize) -> BTreeSet<CutSet> {
    let n = graph.num_vertices();
    let mut by_min: HashMap<usize, Vec<&VertexSet>> = HashMap::new();
    for c in candidates {
        if let Some(m) = c.min_vertex() {
            by_min.entry(m).or_default().push(c);
        }
    }
    let members: HashSet<&VertexSet> = candidates.iter().collect();

    struct Search<'a> {
        graph: &'a Hypergraph,
        by_min: &'a HashMap<usize, Vec<&'a VertexSet>>,
        members: &'a HashSet<&'a VertexSet>,
        n: usize,
    }

    impl Search<'_> {
        fn extend(&self, covered: &VertexSet, parts: &mut Vec<VertexSet>, remaining: usize, out: &mut BTreeSet<CutSet>) {
            let uncovered = self.n - covered.len();
            if remaining == 1 {
                let rest = covered.complement();
                if !rest.is_empty() && self.members.contains(&rest) {
                    parts.push(rest);
                    out.insert(self.crossing(parts));
                    parts.pop();
                }
                return;
            }
            let Some(next) = (0..self.n).find(|&v| !covered.contains(v)) else {
                return;
            };
            let Some(options) = self.by_min.get(&next) else {
                return;
            };
            for &part in options {
                // leave at least one vertex for each later part
                if !part.is_disjoint(covered) || part.len() + remaining - 1 > uncovered {
                    continue;
                }
                let grown = covered.union(part);
                parts.push(part.clone());
                self.extend(&grown, parts, remaining - 1, out);
                parts.pop();
            }
        }

        fn crossing(&self, parts: &[VertexSet]) -> CutSet {
            let mut labels = vec![0; self.n];
            for (i, p) in parts.iter().enumerate() {
                for v in p.iter() {
                    labels[v] = i;
                }
            }
            self.graph.crossing_set_of_labels(&labels)
        }
    }

    let search = Search {
        graph,
        by_min: &by_min,
        members: &members,
        n,
    };
    let firsts: Vec<&VertexSet> = by_min.get(&0).cloned().unwrap_or_default();
    let found: Vec<BTreeSet<CutSet>> = firsts
        .par_iter()
        .map(|&first| {
            let mut out = BTreeSet::new();
            if first.len() + k - 1 <= n {
                let mut parts = vec![first.clone()];
                search.extend(first, &mut parts, k - 1, &mut out);
            }
            out
        })
        .collect();
    found.into_iter().flatten().collect()
}

/// All minimum cut-sets (`k = 2`) using sink `0` and sources of size at most
/// two: at most `n(n-1)/2` terminal-cut computations.
pub fn enum_min_cutsets_k2(graph: &Hypergraph) -> Result<EnumerationReport> {
    let started = Instant::now();
    let n = graph.num_vertices();
    if n < 2 {
        return invalid(format!("a cut needs at least 2 vertices, got {n}"));
    }
    if !graph.is_connected() {
        return Ok(EnumerationReport::already_split(2, started));
    }

    let solver = TerminalCutSolver::new(graph);
    let sink = VertexSet::from_vertices(n, [0]);
    let others: Vec<usize> = (1..n).collect();
    let source_sets = small_subsets(&others, 2);
    let cuts: Vec<(u64, CutSet)> = source_sets
        .par_iter()
        .map(|s| {
            let sources = VertexSet::from_vertices(n, s.iter().copied());
            let (value, side) = solver
                .source_minimal(&sources, &sink)
                .expect("terminal sets are non-empty and disjoint");
            (value, graph.cut_set_unchecked(&side))
        })
        .collect();

    let calls = cuts.len() as u64;
    let seen: BTreeSet<CutSet> = cuts.iter().map(|(_, c)| c.clone()).collect();
    let opt_value = cuts.iter().map(|&(v, _)| v).min().expect("n >= 2 gives at least one source set");
    let family: BTreeSet<CutSet> = cuts.into_iter().filter(|(v, _)| *v == opt_value).map(|(_, c)| c).collect();
    Ok(EnumerationReport {
        k: 2,
        opt_value,
        family: family.into_iter().collect(),
        stats: Stats {
            terminal_cut_calls: calls,
            candidate_sets: 0,
            candidate_cutsets: seen.len() as u64,
            millis: started.elapsed().as_millis() as u64,
        },
    })
}

/// Cost of a minimum k-cut-set. Uses the `k = 2` path when possible.
pub fn min_k_cut_value(graph: &Hypergraph, k: usize) -> Result<u64> {
    if k == 2 && graph.num_vertices() >= 2 {
        return Ok(enum_min_cutsets_k2(graph)?.opt_value);
    }
    Ok(enum_min_k_cutsets(graph, k)?.opt_value)
}
