//! Partition uncrossing and aggregation.
//!
//! Given sink sides `A_1..A_p` of terminal cuts that all contain `V \ U`,
//! the vertices are split by how many `A_i` contain them: none (`Z`), exactly
//! one (`Y_i`), or at least two (`W`). The counting quantity `sigma` of that
//! split is bounded by the cheapest pair `d(A_i) + d(A_j)`, and at least
//! `k - 1` of the `Y_i` can be peeled off into a k-partition whose doubled
//! cost stays below `cost + alpha + beta`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::flow::TerminalCutSolver;
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::subsets::combinations;

/// `(Y_1, .., Y_p, W, Z)`. Any `Y_i` may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UncrossedPartition {
    pub y: Vec<VertexSet>,
    pub w: VertexSet,
    pub z: VertexSet,
}

impl UncrossedPartition {
    pub fn p(&self) -> usize {
        self.y.len()
    }

    /// `Y_i -> i`, `W -> p`, `Z -> p + 1`.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let p = self.y.len();
        let mut labels = vec![usize::MAX; n];
        for (i, part) in self.y.iter().enumerate() {
            for v in part.iter() {
                labels[v] = i;
            }
        }
        for v in self.w.iter() {
            labels[v] = p;
        }
        for v in self.z.iter() {
            labels[v] = p + 1;
        }
        labels
    }

    pub fn empty_y_parts(&self) -> usize {
        self.y.iter().filter(|y| y.is_empty()).count()
    }

    /// True if the `p + 2` sets are pairwise disjoint and cover `0..n`.
    pub fn is_partition_of(&self, n: usize) -> bool {
        let mut seen = VertexSet::empty(n);
        let mut total = 0;
        for part in self.y.iter().chain([&self.w, &self.z]) {
            if part.iter().any(|v| v >= n) || !part.is_disjoint(&seen) {
                return false;
            }
            total += part.len();
            seen.union_with(part);
        }
        total == n
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SigmaBreakdown {
    /// Cost of hyperedges meeting at least two of the `p + 2` parts.
    pub cost_partition: u64,
    /// Cost of hyperedges inside `W ∪ Z` meeting both.
    pub cost_wz: u64,
    /// Cost of hyperedges meeting `Z` and at least two of `Y_1..Y_p, W`.
    pub alpha: u64,
    /// Cost of hyperedges missing `Z` and meeting at least two `Y_i`.
    pub beta: u64,
    pub sigma: u64,
}

/// Builds `Z = ∩ (V \ A_i)`, `W = ∪_{i<j} (A_i ∩ A_j)`, `Y_i = A_i \ W`.
pub fn uncross(graph: &Hypergraph, u: &VertexSet, sink_sides: &[VertexSet]) -> Result<UncrossedPartition> {
    let n = graph.num_vertices();
    if sink_sides.len() < 2 {
        return invalid(format!("uncrossing needs at least 2 cuts, got {}", sink_sides.len()));
    }
    if u.iter().chain(sink_sides.iter().flat_map(|a| a.iter())).any(|v| v >= n) {
        return invalid(format!("vertex outside 0..{n}"));
    }
    let outside = VertexSet::from_vertices(n, (0..n).filter(|&v| !u.contains(v)));
    if let Some(i) = sink_sides.iter().position(|a| !outside.is_subset(a)) {
        return invalid(format!("sink side {i} does not contain V \\ U"));
    }

    let mut hits = vec![0usize; n];
    for a in sink_sides {
        for v in a.iter() {
            hits[v] += 1;
        }
    }
    let w = VertexSet::from_vertices(n, (0..n).filter(|&v| hits[v] >= 2));
    let z = VertexSet::from_vertices(n, (0..n).filter(|&v| hits[v] == 0));
    let y = sink_sides.iter().map(|a| a.difference(&w)).collect();
    Ok(UncrossedPartition { y, w, z })
}

/// Cost-weighted `sigma = cost + cost(W, Z) + alpha + beta`.
pub fn sigma(graph: &Hypergraph, partition: &UncrossedPartition) -> SigmaBreakdown {
    let n = graph.num_vertices();
    let p = partition.p();
    let labels = partition.labels(n);
    let (w_label, z_label) = (p, p + 1);
    let mut out = SigmaBreakdown::default();
    let mut met = Vec::with_capacity(8);
    for e in graph.edges() {
        met.clear();
        met.extend(e.vertices().iter().map(|&v| labels[v]));
        met.sort_unstable();
        met.dedup();
        let meets_w = met.contains(&w_label);
        let meets_z = met.contains(&z_label);
        let y_parts = met.iter().filter(|&&l| l < p).count();
        let c = e.cost();
        if met.len() >= 2 {
            out.cost_partition += c;
        }
        if meets_w && meets_z && y_parts == 0 {
            out.cost_wz += c;
        }
        if meets_z && y_parts + usize::from(meets_w) >= 2 {
            out.alpha += c;
        }
        if !meets_z && y_parts >= 2 {
            out.beta += c;
        }
    }
    out.sigma = out.cost_partition + out.cost_wz + out.alpha + out.beta;
    out
}

/// Sink sides `A_i` of the source-minimal minimum
/// `((S ∪ R) \ {u_i}, V \ U)`-terminal cuts, one per `u_i` in `s`.
pub fn minimum_uncrossing_cuts(
    graph: &Hypergraph,
    u: &VertexSet,
    r: &VertexSet,
    s: &[usize],
) -> Result<Vec<VertexSet>> {
    let n = graph.num_vertices();
    let solver = TerminalCutSolver::new(graph);
    let sinks = VertexSet::from_vertices(n, (0..n).filter(|&v| !u.contains(v)));
    s.iter()
        .map(|&ui| {
            let mut sources = r.clone();
            for &v in s.iter().filter(|&&v| v != ui) {
                sources.insert(v);
            }
            let (_, side) = solver.source_minimal(&sources, &sinks)?;
            Ok(side.complement())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UncrossingVerdict {
    /// The full premise: set shapes, minimality of every cut, and
    /// `u_i ∈ A_i \ ∪_{j≠i} A_j`.
    pub hypothesis_holds: bool,
    /// `sigma <= min_{i≠j} d(A_i) + d(A_j)`; false when the premise fails.
    pub inequality_holds: bool,
    /// Equality for `p = 2`; vacuously true for other `p` and false when the
    /// premise fails.
    pub equality_when_p2: bool,
    pub sigma: Option<SigmaBreakdown>,
    pub pair_bound: Option<u64>,
    pub partition: Option<UncrossedPartition>,
}

impl UncrossingVerdict {
    fn premise_failed() -> Self {
        UncrossingVerdict {
            hypothesis_holds: false,
            inequality_holds: false,
            equality_when_p2: false,
            sigma: None,
            pair_bound: None,
            partition: None,
        }
    }

    /// False only when the premise holds and a conclusion fails.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || (self.inequality_holds && self.equality_when_p2)
    }
}

fn premise_holds(graph: &Hypergraph, u: &VertexSet, r: &VertexSet, s: &[usize], sink_sides: &[VertexSet]) -> bool {
    let n = graph.num_vertices();
    let p = s.len();
    if p < 2 || sink_sides.len() != p {
        return false;
    }
    let in_range = |set: &VertexSet| set.iter().all(|v| v < n);
    if !in_range(u) || !in_range(r) || s.iter().any(|&v| v >= n) || !sink_sides.iter().all(in_range) {
        return false;
    }
    // ∅ ≠ R ⊊ U ⊊ V
    if r.is_empty() || !r.is_subset(u) || r.len() == u.len() || u.len() == n {
        return false;
    }
    let mut distinct = s.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != p || s.iter().any(|&v| !u.contains(v) || r.contains(v)) {
        return false;
    }

    let solver = TerminalCutSolver::new(graph);
    let outside = u.complement();
    for (i, a) in sink_sides.iter().enumerate() {
        let source_side = a.complement();
        let mut terminals = r.clone();
        for (j, &v) in s.iter().enumerate() {
            if j != i {
                terminals.insert(v);
            }
        }
        if !terminals.is_subset(&source_side) || !outside.is_subset(a) {
            return false;
        }
        let Ok(best) = solver.value(&terminals, &outside) else {
            return false;
        };
        if graph.cut_value_unchecked(a) != best {
            return false;
        }
    }
    s.iter().enumerate().all(|(i, &ui)| {
        sink_sides[i].contains(ui) && sink_sides.iter().enumerate().all(|(j, a)| j == i || !a.contains(ui))
    })
}

/// Checks the uncrossing bound for the cuts `(V \ A_i, A_i)`, where `A_i`
/// pairs with `s[i]`.
pub fn check_uncrossing_lemma(
    graph: &Hypergraph,
    u: &VertexSet,
    r: &VertexSet,
    s: &[usize],
    sink_sides: &[VertexSet],
) -> UncrossingVerdict {
    if !premise_holds(graph, u, r, s, sink_sides) {
        return UncrossingVerdict::premise_failed();
    }
    let partition = uncross(graph, u, sink_sides).expect("premise implies valid uncrossing input");
    let breakdown = sigma(graph, &partition);
    let values: Vec<u64> = sink_sides.iter().map(|a| graph.cut_value_unchecked(a)).collect();
    let mut bound = u64::MAX;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            bound = bound.min(values[i] + values[j]);
        }
    }
    UncrossingVerdict {
        hypothesis_holds: true,
        inequality_holds: breakdown.sigma <= bound,
        equality_when_p2: s.len() != 2 || breakdown.sigma == bound,
        sigma: Some(breakdown),
        pair_bound: Some(bound),
        partition: Some(partition),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Aggregation {
    /// Indices `i_1 < .. < i_{k-1}` into `Y`.
    pub indices: Vec<usize>,
    /// `(Y_{i_1}, .., Y_{i_{k-1}}, rest)`; empty `Y` parts are kept as-is and
    /// cross nothing.
    pub parts: Vec<VertexSet>,
    /// `2 * cost(parts)`.
    pub doubled_cost: u64,
    /// `cost + alpha + beta` of the uncrossed partition.
    pub budget: u64,
    pub holds: bool,
}

/// Scans the `(k-1)`-subsets of `Y` in lexicographic order for the first one
/// whose k-partition has doubled cost within the budget. When none
/// qualifies, the cheapest subset is returned with `holds = false`.
pub fn aggregate(graph: &Hypergraph, partition: &UncrossedPartition, k: usize) -> Result<Aggregation> {
    let p = partition.p();
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    if p < 2 * k - 2 {
        return invalid(format!("aggregation into {k} parts needs p >= {}, got {p}", 2 * k - 2));
    }
    let n = graph.num_vertices();
    let breakdown = sigma(graph, partition);
    let budget = breakdown.cost_partition + breakdown.alpha + breakdown.beta;

    let mut cheapest: Option<Aggregation> = None;
    for indices in combinations(p, k - 1) {
        let mut labels = vec![k - 1; n];
        for (slot, &i) in indices.iter().enumerate() {
            for v in partition.y[i].iter() {
                labels[v] = slot;
            }
        }
        let doubled_cost = 2 * graph.crossing_cost_of_labels(&labels);
        let holds = doubled_cost <= budget;
        if holds || cheapest.as_ref().is_none_or(|c| doubled_cost < c.doubled_cost) {
            let mut parts: Vec<VertexSet> = indices.iter().map(|&i| partition.y[i].clone()).collect();
            parts.push(VertexSet::from_vertices(n, (0..n).filter(|&v| labels[v] == k - 1)));
            let found = Aggregation {
                indices,
                parts,
                doubled_cost,
                budget,
                holds,
            };
            if holds {
                return Ok(found);
            }
            cheapest = Some(found);
        }
    }
    Ok(cheapest.expect("p >= k - 1 gives at least one subset"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::with_unit_costs(n, (0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
    }

    #[test]
    fn identical_sides_collapse_into_w() {
        let g = cycle(5);
        let u = set(5, &[0, 1, 2]);
        let a = set(5, &[3, 4]);
        let part = uncross(&g, &u, &[a.clone(), a.clone()]).unwrap();
        assert_eq!(part.w, a);
        assert_eq!(part.z, u);
        assert!(part.y.iter().all(VertexSet::is_empty));
        assert_eq!(part.empty_y_parts(), 2);
        assert!(part.is_partition_of(5));
    }

    #[test]
    fn cycle_five_example() {
        let g = cycle(5);
        let u = set(5, &[0, 1, 2]);
        let part = uncross(&g, &u, &[set(5, &[1, 3, 4]), set(5, &[2, 3, 4])]).unwrap();
        assert_eq!(part.w, set(5, &[3, 4]));
        assert_eq!(part.z, set(5, &[0]));
        assert_eq!(part.y, vec![set(5, &[1]), set(5, &[2])]);
    }

    #[test]
    fn uncross_rejects_bad_input() {
        let g = cycle(5);
        let u = set(5, &[0, 1, 2]);
        assert!(uncross(&g, &u, &[set(5, &[3, 4])]).is_err());
        assert!(uncross(&g, &u, &[set(5, &[3, 4]), set(5, &[3])]).is_err());
    }

    #[test]
    fn sigma_of_internal_edges_is_zero() {
        let g = Hypergraph::with_unit_costs(4, [vec![0, 1], vec![2, 3]]).unwrap();
        let part = UncrossedPartition {
            y: vec![set(4, &[0, 1]), VertexSet::empty(4)],
            w: set(4, &[2, 3]),
            z: VertexSet::empty(4),
        };
        assert_eq!(sigma(&g, &part), SigmaBreakdown::default());
    }

    #[test]
    fn sigma_of_single_wz_edge() {
        let g = Hypergraph::new(3, [(vec![1, 2], 4)]).unwrap();
        let part = UncrossedPartition {
            y: vec![set(3, &[0]), VertexSet::empty(3)],
            w: set(3, &[1]),
            z: set(3, &[2]),
        };
        let s = sigma(&g, &part);
        assert_eq!((s.cost_partition, s.cost_wz, s.alpha, s.beta, s.sigma), (4, 4, 0, 0, 8));
    }

    #[test]
    fn aggregate_guards_and_degenerate_case() {
        let g = cycle(4);
        let part = UncrossedPartition {
            y: vec![VertexSet::empty(4), VertexSet::empty(4)],
            w: set(4, &[0, 1]),
            z: set(4, &[2, 3]),
        };
        assert!(aggregate(&g, &part, 3).is_err());
        let agg = aggregate(&g, &part, 2).unwrap();
        assert!(agg.holds);
        assert_eq!(agg.indices, vec![0]);
        assert_eq!(agg.doubled_cost, 0);
    }

    #[test]
    fn uncrossing_premise_failures() {
        let g = cycle(5);
        let u = set(5, &[0, 1, 2]);
        let r = set(5, &[0]);
        // a single cut is not enough
        let v = check_uncrossing_lemma(&g, &u, &r, &[1], &[set(5, &[1, 3, 4])]);
        assert!(!v.hypothesis_holds && v.consistent());
        // R must not be empty
        let v = check_uncrossing_lemma(&g, &u, &VertexSet::empty(5), &[1, 2], &[set(5, &[1, 3, 4]), set(5, &[2, 3, 4])]);
        assert!(!v.hypothesis_holds);
    }

    #[test]
    fn uncrossing_on_cycle_five() {
        // U = {0,1,2}, R = {0}, S = (1, 2); the minimum ({0,2}, {3,4}) cut
        // leaves A_1 ⊇ {1,3,4} and symmetrically for A_2
        let g = cycle(5);
        let u = set(5, &[0, 1, 2]);
        let r = set(5, &[0]);
        let cuts = minimum_uncrossing_cuts(&g, &u, &r, &[1, 2]).unwrap();
        let v = check_uncrossing_lemma(&g, &u, &r, &[1, 2], &cuts);
        if v.hypothesis_holds {
            assert!(v.inequality_holds);
            assert!(v.equality_when_p2);
        }
        assert!(v.consistent());
    }
}
