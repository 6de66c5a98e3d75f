//! Exact minimum `(S, T)`-terminal cuts.
//!
//! Each hyperedge `e` becomes two flow nodes `e_in -> e_out` joined by an arc
//! of capacity `cost(e)`; every member `v` gets arcs `v -> e_in` and
//! `e_out -> v` of unbounded capacity. A finite `(S, T)` cut of this network
//! corresponds to a terminal cut of the hypergraph with the same value.
//! Terminal sets are merged into a super-source and super-sink implicitly:
//! searches start from every vertex of `S` at once and stop at any vertex of
//! `T`.
//!
//! Max-flow is Dinic's blocking-flow method on integers. After the flow is
//! maximum, the vertices reachable from `S` in the residual network
//! form the source-minimal optimal side, and the vertices that cannot reach
//! `T` form the source-maximal one.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// Optimum of one `(S, T)` query together with the extreme optimal sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalCut {
    pub value: u64,
    pub source_minimal: VertexSet,
    pub source_maximal: VertexSet,
}

/// Flow network derived once from a hypergraph and reused across queries.
///
/// The solver only holds immutable data; every query allocates its own
/// residual state, so one solver can serve many threads.
#[derive(Debug, Clone)]
pub struct TerminalCutSolver<'g> {
    graph: &'g Hypergraph,
    num_nodes: usize,
    /// Arcs `start[u]..start[u + 1]` leave node `u`.
    start: Vec<usize>,
    /// Arc `a` runs to `head[a]`; `rev[a]` is its reverse.
    head: Vec<usize>,
    rev: Vec<usize>,
    capacity: Vec<u64>,
}

/// Residual capacities of a flow together with its value.
#[derive(Debug, Clone)]
pub(crate) struct Flow {
    res: Vec<u64>,
    pub(crate) value: u64,
}

/// Search buffers reused across augmentations.
pub(crate) struct Scratch {
    level: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<usize>,
    /// Next arc position to try per node during a blocking-flow phase.
    current: Vec<usize>,
}

impl<'g> TerminalCutSolver<'g> {
    pub fn new(graph: &'g Hypergraph) -> Self {
        let n = graph.num_vertices();
        let num_nodes = n + 2 * graph.num_edges();
        let infinite = graph.total_cost() + 1;

        let mut head = Vec::with_capacity(2 * (graph.num_edges() + 2 * graph.size()));
        let mut capacity = Vec::with_capacity(head.capacity());
        let mut tail = Vec::with_capacity(head.capacity());
        let mut add_arc = |from: usize, to: usize, cap: u64| {
            head.push(to);
            capacity.push(cap);
            tail.push(from);
            head.push(from);
            capacity.push(0);
            tail.push(to);
        };
        for (id, e) in graph.edges().iter().enumerate() {
            let e_in = n + 2 * id;
            let e_out = e_in + 1;
            add_arc(e_in, e_out, e.cost());
            for &v in e.vertices() {
                add_arc(v, e_in, infinite);
                add_arc(e_out, v, infinite);
            }
        }

        let mut start = vec![0; num_nodes + 1];
        for &u in &tail {
            start[u + 1] += 1;
        }
        for u in 0..num_nodes {
            start[u + 1] += start[u];
        }
        // renumber arcs so that the arcs of each node are contiguous
        let mut fill = start.clone();
        let mut position = vec![0; tail.len()];
        for (a, &u) in tail.iter().enumerate() {
            position[a] = fill[u];
            fill[u] += 1;
        }
        let mut sorted_head = vec![0; tail.len()];
        let mut sorted_capacity = vec![0; tail.len()];
        let mut rev = vec![0; tail.len()];
        for (a, &p) in position.iter().enumerate() {
            sorted_head[p] = head[a];
            sorted_capacity[p] = capacity[a];
            rev[p] = position[a ^ 1];
        }

        TerminalCutSolver {
            graph,
            num_nodes,
            start,
            head: sorted_head,
            rev,
            capacity: sorted_capacity,
        }
    }

    pub fn graph(&self) -> &'g Hypergraph {
        self.graph
    }

    fn arcs(&self, u: usize) -> std::ops::Range<usize> {
        self.start[u]..self.start[u + 1]
    }

    fn validate(&self, sources: &VertexSet, sinks: &VertexSet) -> Result<()> {
        let n = self.graph.num_vertices();
        if sources.is_empty() || sinks.is_empty() {
            return invalid("terminal sets S and T must be non-empty");
        }
        if sources.iter().chain(sinks.iter()).any(|v| v >= n) {
            return invalid(format!("terminal vertex outside 0..{n}"));
        }
        if !sources.is_disjoint(sinks) {
            return invalid("terminal sets S and T must be disjoint");
        }
        Ok(())
    }

    pub(crate) fn zero_flow(&self) -> Flow {
        Flow {
            res: self.capacity.clone(),
            value: 0,
        }
    }

    pub(crate) fn scratch(&self) -> Scratch {
        Scratch {
            level: vec![0; self.num_nodes],
            stamp: vec![0; self.num_nodes],
            epoch: 0,
            queue: Vec::with_capacity(self.num_nodes),
            current: vec![0; self.num_nodes],
        }
    }

    pub(crate) fn augment(&self, flow: &mut Flow, sources: &VertexSet, sinks: &VertexSet) -> VertexSet {
        self.augment_with(flow, sources, sinks, &mut self.scratch())
    }

    /// Augments `flow` to a maximum `(S, T)`-flow and returns the vertices
    /// reachable from `S` in the final residual network.
    ///
    /// `flow` must be feasible for `(S, T)`; in particular a maximum flow for
    /// `(S', T')` with `S' ⊆ S`, `T' ⊆ T` can be extended.
    pub(crate) fn augment_with(
        &self,
        flow: &mut Flow,
        sources: &VertexSet,
        sinks: &VertexSet,
        scratch: &mut Scratch,
    ) -> VertexSet {
        let n = self.graph.num_vertices();
        loop {
            if !self.build_levels(&flow.res, sources, sinks, scratch) {
                // the search reached no sink, so it explored the whole
                // residual component of S
                let mut side = VertexSet::empty(n);
                for &v in scratch.queue.iter().filter(|&&v| v < n) {
                    side.insert(v);
                }
                return side;
            }
            for u in 0..self.num_nodes {
                scratch.current[u] = self.start[u];
            }
            for s in sources.iter() {
                flow.value += self.push(s, u64::MAX, &mut flow.res, sinks, scratch);
            }
        }
    }

    /// Breadth-first levels from `S` in the residual network, cut off at the
    /// level of the nearest sink. Returns whether a sink was reached.
    fn build_levels(&self, res: &[u64], sources: &VertexSet, sinks: &VertexSet, scratch: &mut Scratch) -> bool {
        let n = self.graph.num_vertices();
        if scratch.epoch == u32::MAX {
            scratch.stamp.iter_mut().for_each(|s| *s = 0);
            scratch.epoch = 0;
        }
        scratch.epoch += 1;
        let mark = scratch.epoch;
        let Scratch { level, stamp, queue, .. } = scratch;
        queue.clear();
        for s in sources.iter() {
            stamp[s] = mark;
            level[s] = 0;
            queue.push(s);
        }
        let mut sink_level = u32::MAX;
        let mut next = 0;
        while next < queue.len() {
            let u = queue[next];
            next += 1;
            if level[u] + 1 > sink_level || (u < n && sinks.contains(u)) {
                continue;
            }
            for a in self.arcs(u) {
                let w = self.head[a];
                if res[a] == 0 || stamp[w] == mark {
                    continue;
                }
                stamp[w] = mark;
                level[w] = level[u] + 1;
                if w < n && sinks.contains(w) {
                    sink_level = level[w];
                }
                queue.push(w);
            }
        }
        sink_level != u32::MAX
    }

    /// Pushes up to `limit` units from `u` towards the sinks along the level
    /// graph and returns the amount pushed.
    fn push(&self, u: usize, limit: u64, res: &mut [u64], sinks: &VertexSet, scratch: &mut Scratch) -> u64 {
        if u < self.graph.num_vertices() && sinks.contains(u) {
            return limit;
        }
        let mark = scratch.epoch;
        let mut total = 0;
        while scratch.current[u] < self.start[u + 1] {
            let a = scratch.current[u];
            let w = self.head[a];
            if res[a] > 0 && scratch.stamp[w] == mark && scratch.level[w] == scratch.level[u] + 1 {
                let pushed = self.push(w, (limit - total).min(res[a]), res, sinks, scratch);
                if pushed > 0 {
                    res[a] -= pushed;
                    res[self.rev[a]] += pushed;
                    total += pushed;
                    if total == limit {
                        return total;
                    }
                }
            }
            // the arc is saturated or leads nowhere in this phase
            scratch.current[u] += 1;
        }
        total
    }

    fn reaching(&self, sinks: &VertexSet, res: &[u64]) -> VertexSet {
        let n = self.graph.num_vertices();
        let mut seen = vec![false; self.num_nodes];
        let mut stack: Vec<usize> = sinks.iter().collect();
        for &t in &stack {
            seen[t] = true;
        }
        while let Some(w) = stack.pop() {
            // arcs x -> w are the reverses of arcs leaving w
            for b in self.arcs(w) {
                let x = self.head[b];
                if res[self.rev[b]] > 0 && !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        VertexSet::from_vertices(n, (0..n).filter(|&v| seen[v]))
    }

    /// Value plus source-minimal and source-maximal optimal sides.
    pub fn solve(&self, sources: &VertexSet, sinks: &VertexSet) -> Result<TerminalCut> {
        self.validate(sources, sinks)?;
        let mut flow = self.zero_flow();
        let source_minimal = self.augment(&mut flow, sources, sinks);
        let source_maximal = self.reaching(sinks, &flow.res).complement();
        Ok(TerminalCut {
            value: flow.value,
            source_minimal,
            source_maximal,
        })
    }

    /// Value and source-minimal side only.
    pub fn source_minimal(&self, sources: &VertexSet, sinks: &VertexSet) -> Result<(u64, VertexSet)> {
        self.validate(sources, sinks)?;
        let mut flow = self.zero_flow();
        let side = self.augment(&mut flow, sources, sinks);
        Ok((flow.value, side))
    }

    pub fn value(&self, sources: &VertexSet, sinks: &VertexSet) -> Result<u64> {
        self.validate(sources, sinks)?;
        let mut flow = self.zero_flow();
        self.augment(&mut flow, sources, sinks);
        Ok(flow.value)
    }
}

/// Minimum `(S, T)`-terminal cut with its source-minimal and source-maximal
/// optimal sides.
pub fn min_terminal_cut(graph: &Hypergraph, sources: &VertexSet, sinks: &VertexSet) -> Result<TerminalCut> {
    TerminalCutSolver::new(graph).solve(sources, sinks)
}

pub fn min_terminal_cut_value(graph: &Hypergraph, sources: &VertexSet, sinks: &VertexSet) -> Result<u64> {
    TerminalCutSolver::new(graph).value(sources, sinks)
}
