//! Hypergraph data model and the cut-function primitives.
//!
//! Vertices are dense indices `0..n`. Hyperedges are identified by their
//! position in the edge list and carry a strictly positive integer cost.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{invalid, Result};

/// A subset of the vertices of a hypergraph, stored as a bit set over `0..n`.
///
/// Equality, hashing and ordering only look at the members, never at the
/// universe size. Ordering is lexicographic on the ascending member list.
#[derive(Clone, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set over the universe `0..n`. Panics if a vertex is `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Like [`VertexSet::from_vertices`] but reports out-of-range vertices.
    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in vertices {
            if v >= n {
                return invalid(format!("vertex {v} out of range 0..{n}"));
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Blocks with trailing zero blocks trimmed, so sets over different
    /// universe sizes with equal members compare and hash equal.
    fn trimmed_blocks(&self) -> &[usize] {
        let blocks = self.bits.as_slice();
        let end = blocks.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
        &blocks[..end]
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed_blocks() == other.trimmed_blocks()
    }
}

impl Eq for VertexSet {}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed_blocks().hash(state);
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    vertices: Vec<usize>,
    cost: u64,
}

impl Hyperedge {
    /// Member vertices in ascending order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn cost(&self) -> u64 {
        self.cost
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True if the hyperedge has members both inside and outside `side`.
    pub fn crosses(&self, side: &VertexSet) -> bool {
        let first = side.contains(self.vertices[0]);
        self.vertices[1..].iter().any(|&v| side.contains(v) != first)
    }

    /// True if the hyperedge meets at least two distinct labels.
    fn crosses_labels(&self, labels: &[usize]) -> bool {
        let first = labels[self.vertices[0]];
        self.vertices[1..].iter().any(|&v| labels[v] != first)
    }
}

/// An immutable hypergraph with positive integer hyperedge costs.
///
/// Parallel hyperedges are allowed and stay distinct by identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
    size: usize,
}

impl Hypergraph {
    /// Builds a hypergraph on `n` vertices from `(vertices, cost)` pairs.
    ///
    /// Every hyperedge must have at least two distinct in-range vertices and
    /// a cost of at least one.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, u64)>,
        E: IntoIterator<Item = usize>,
    {
        let mut built = Vec::new();
        let mut size = 0;
        for (id, (members, cost)) in edges.into_iter().enumerate() {
            let mut vertices: Vec<usize> = members.into_iter().collect();
            vertices.sort_unstable();
            if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
                return invalid(format!("hyperedge {id}: vertex {v} out of range 0..{n}"));
            }
            if vertices.windows(2).any(|w| w[0] == w[1]) {
                return invalid(format!("hyperedge {id}: repeated vertex"));
            }
            if vertices.len() < 2 {
                return invalid(format!(
                    "hyperedge {id}: size {} is below the minimum of 2",
                    vertices.len()
                ));
            }
            if cost == 0 {
                return invalid(format!("hyperedge {id}: cost must be at least 1"));
            }
            size += vertices.len();
            built.push(Hyperedge { vertices, cost });
        }
        Ok(Hypergraph {
            n,
            edges: built,
            size,
        })
    }

    /// Unit-cost convenience constructor.
    pub fn with_unit_costs<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        Self::new(n, edges.into_iter().map(|e| (e, 1)))
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Representation size: the sum of hyperedge sizes.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Hyperedge {
        &self.edges[id]
    }

    pub fn total_cost(&self) -> u64 {
        self.edges.iter().map(|e| e.cost).sum()
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Result<VertexSet> {
        VertexSet::try_from_vertices(self.n, vertices)
    }

    fn check_universe(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n && set.iter().any(|v| v >= self.n) {
            return invalid(format!("vertex set {set:?} is not a subset of 0..{}", self.n));
        }
        Ok(())
    }

    fn check_proper(&self, set: &VertexSet) -> Result<()> {
        self.check_universe(set)?;
        if set.is_empty() {
            return invalid("vertex set must be non-empty");
        }
        if set.len() == self.n {
            return invalid("vertex set must be a proper subset of V");
        }
        Ok(())
    }

    /// Total cost of hyperedges crossing `(U, V \ U)`.
    pub fn cut_value(&self, side: &VertexSet) -> Result<u64> {
        self.check_proper(side)?;
        Ok(self.cut_value_unchecked(side))
    }

    pub(crate) fn cut_value_unchecked(&self, side: &VertexSet) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.crosses(side))
            .map(|e| e.cost)
            .sum()
    }

    /// The set of hyperedges crossing `(U, V \ U)`.
    pub fn cut_set(&self, side: &VertexSet) -> Result<CutSet> {
        self.check_proper(side)?;
        Ok(self.cut_set_unchecked(side))
    }

    pub(crate) fn cut_set_unchecked(&self, side: &VertexSet) -> CutSet {
        let mut ids = Vec::new();
        let mut total = 0;
        for (id, e) in self.edges.iter().enumerate() {
            if e.crosses(side) {
                ids.push(id);
                total += e.cost;
            }
        }
        CutSet {
            edge_ids: ids,
            total_cost: total,
        }
    }

    /// The hyperedges meeting at least two parts of `partition`.
    pub fn crossing_set(&self, partition: &VertexPartition) -> Result<CutSet> {
        if partition.num_vertices() != self.n {
            return invalid(format!(
                "partition covers {} vertices, hypergraph has {}",
                partition.num_vertices(),
                self.n
            ));
        }
        Ok(self.crossing_set_of_labels(&partition.labels()))
    }

    /// Crossing set for a labelling `vertex -> part index`.
    pub(crate) fn crossing_set_of_labels(&self, labels: &[usize]) -> CutSet {
        let mut ids = Vec::new();
        let mut total = 0;
        for (id, e) in self.edges.iter().enumerate() {
            if e.crosses_labels(labels) {
                ids.push(id);
                total += e.cost;
            }
        }
        CutSet {
            edge_ids: ids,
            total_cost: total,
        }
    }

    pub(crate) fn crossing_cost_of_labels(&self, labels: &[usize]) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.crosses_labels(labels))
            .map(|e| e.cost)
            .sum()
    }

    /// Connected components of the hypergraph, sorted by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_skipping(|_| false)
    }

    /// Connected components after deleting the hyperedges of `removed`.
    /// Isolated vertices form singleton components; components are sorted
    /// by their minimum vertex.
    pub fn components_after_removal(&self, removed: &CutSet) -> Result<Vec<VertexSet>> {
        if let Some(&id) = removed.edge_ids.iter().find(|&&id| id >= self.edges.len()) {
            return invalid(format!("unknown hyperedge id {id}"));
        }
        let mut gone = vec![false; self.edges.len()];
        for &id in &removed.edge_ids {
            gone[id] = true;
        }
        Ok(self.components_skipping(|id| gone[id]))
    }

    /// Number of components after deleting `removed`; ids must be valid.
    pub(crate) fn count_components_after_removal(&self, removed: &CutSet) -> usize {
        let mut uf = DisjointSets::new(self.n);
        let mut skip = removed.edge_ids.iter().peekable();
        for (id, e) in self.edges.iter().enumerate() {
            if skip.peek() == Some(&&id) {
                skip.next();
                continue;
            }
            for w in e.vertices.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.count()
    }

    fn components_skipping(&self, skip: impl Fn(usize) -> bool) -> Vec<VertexSet> {
        let mut uf = DisjointSets::new(self.n);
        for (id, e) in self.edges.iter().enumerate() {
            if skip(id) {
                continue;
            }
            for w in e.vertices.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        // Vertices are visited in ascending order, so the first time a root
        // is seen fixes the component order by minimum vertex.
        let mut slot = vec![usize::MAX; self.n];
        let mut out: Vec<VertexSet> = Vec::new();
        for v in 0..self.n {
            let r = uf.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(VertexSet::empty(self.n));
            }
            out[slot[r]].insert(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// `G[V \ U]`: drops the vertices of `removed` and every hyperedge that
    /// meets them, relabelling the survivors to `0..n - |U|`.
    pub fn induced_subhypergraph(&self, removed: &VertexSet) -> Result<InducedSubhypergraph> {
        self.check_proper(removed)?;
        let kept: Vec<usize> = (0..self.n).filter(|&v| !removed.contains(v)).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edge_map = Vec::new();
        let mut edges = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if e.vertices.iter().any(|&v| removed.contains(v)) {
                continue;
            }
            edge_map.push(id);
            edges.push((e.vertices.iter().map(|&v| new_index[v]).collect::<Vec<_>>(), e.cost));
        }
        let graph = Hypergraph::new(kept.len(), edges)?;
        Ok(InducedSubhypergraph {
            graph,
            vertex_map: kept,
            edge_map,
        })
    }
}

/// Result of [`Hypergraph::induced_subhypergraph`].
#[derive(Debug, Clone)]
pub struct InducedSubhypergraph {
    pub graph: Hypergraph,
    /// `vertex_map[new] = old`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[new] = old`.
    pub edge_map: Vec<usize>,
}

/// A canonical set of hyperedge identifiers with its total cost.
///
/// Two cut-sets are equal iff their identifier lists are equal; ordering is
/// lexicographic on the ascending identifier list.
#[derive(Debug, Clone, Default)]
pub struct CutSet {
    edge_ids: Vec<usize>,
    total_cost: u64,
}

impl CutSet {
    pub fn empty() -> Self {
        CutSet::default()
    }

    /// Builds the canonical form of `ids` in `graph`, rejecting unknown ids.
    pub fn from_edges<I: IntoIterator<Item = usize>>(graph: &Hypergraph, ids: I) -> Result<Self> {
        let mut edge_ids: Vec<usize> = ids.into_iter().collect();
        edge_ids.sort_unstable();
        edge_ids.dedup();
        if let Some(&id) = edge_ids.iter().find(|&&id| id >= graph.num_edges()) {
            return invalid(format!("unknown hyperedge id {id}"));
        }
        let total_cost = edge_ids.iter().map(|&id| graph.edge(id).cost).sum();
        Ok(CutSet {
            edge_ids,
            total_cost,
        })
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn total_cost(&self) -> u64 {
        self.total_cost
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

impl PartialEq for CutSet {
    fn eq(&self, other: &Self) -> bool {
        self.edge_ids == other.edge_ids
    }
}

impl Eq for CutSet {}

impl Hash for CutSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.edge_ids.hash(state);
    }
}

impl Ord for CutSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edge_ids.cmp(&other.edge_ids)
    }
}

impl PartialOrd for CutSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered tuple of at least two pairwise disjoint, non-empty vertex sets
/// covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    parts: Vec<VertexSet>,
}

impl VertexPartition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        if parts.len() < 2 {
            return invalid(format!("a partition needs at least 2 parts, got {}", parts.len()));
        }
        let mut seen = VertexSet::empty(n);
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return invalid(format!("part {i} is empty"));
            }
            if let Some(v) = part.iter().find(|&v| v >= n) {
                return invalid(format!("part {i} contains vertex {v} outside 0..{n}"));
            }
            if !part.is_disjoint(&seen) {
                return invalid(format!("part {i} overlaps an earlier part"));
            }
            seen.union_with(part);
        }
        if seen.len() != n {
            return invalid("parts do not cover every vertex");
        }
        Ok(VertexPartition { n, parts })
    }

    /// Builds a partition from a labelling `vertex -> part` with labels in
    /// `0..k`; every label must be used.
    pub fn from_labels(labels: &[usize], k: usize) -> Result<Self> {
        let n = labels.len();
        let mut parts = vec![VertexSet::empty(n); k];
        for (v, &l) in labels.iter().enumerate() {
            if l >= k {
                return invalid(format!("label {l} of vertex {v} is not below {k}"));
            }
            parts[l].insert(v);
        }
        Self::new(n, parts)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `labels[v]` is the index of the part containing `v`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for v in part.iter() {
                labels[v] = i;
            }
        }
        labels
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
    count: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        self.count -= 1;
        match self.rank[ra].cmp(&self.rank[rb]) {
            Ordering::Less => self.parent[ra] = rb,
            Ordering::Greater => self.parent[rb] = ra,
            Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::with_unit_costs(n, (0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
    }

    fn spanning(n: usize) -> Hypergraph {
        Hypergraph::with_unit_costs(n, std::iter::once(0..n)).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn cut_value_examples() {
        assert_eq!(spanning(5).cut_value(&set(5, &[0])).unwrap(), 1);
        assert_eq!(cycle(4).cut_value(&set(4, &[0, 1])).unwrap(), 2);
    }

    #[test]
    fn cut_value_rejects_trivial_sides() {
        let g = cycle(4);
        assert!(matches!(g.cut_value(&VertexSet::empty(4)), Err(Error::InvalidArgument(_))));
        assert!(matches!(g.cut_value(&VertexSet::full(4)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn construction_rejects_degenerate_edges() {
        assert!(Hypergraph::with_unit_costs(3, [vec![0]]).is_err());
        assert!(Hypergraph::with_unit_costs(3, [Vec::<usize>::new()]).is_err());
        assert!(Hypergraph::with_unit_costs(3, [vec![0, 0]]).is_err());
        assert!(Hypergraph::with_unit_costs(3, [vec![0, 3]]).is_err());
        assert!(Hypergraph::new(3, [(vec![0, 1], 0)]).is_err());
        // parallel edges are fine
        let g = Hypergraph::with_unit_costs(3, [vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.size(), 4);
    }

    #[test]
    fn crossing_set_examples() {
        let g = spanning(4);
        let p = VertexPartition::from_labels(&[0, 1, 1, 1], 2).unwrap();
        let f = g.crossing_set(&p).unwrap();
        assert_eq!(f.edge_ids(), &[0]);
        assert_eq!(f.total_cost(), 1);

        let g = Hypergraph::with_unit_costs(4, [vec![0, 1], vec![2, 3]]).unwrap();
        let p = VertexPartition::from_labels(&[0, 0, 1, 1], 2).unwrap();
        assert!(g.crossing_set(&p).unwrap().is_empty());

        // C_5 edges: 0:{0,1} 1:{1,2} 2:{2,3} 3:{3,4} 4:{4,0}
        let g = cycle(5);
        let p = VertexPartition::new(5, vec![set(5, &[0, 1]), set(5, &[2, 3]), set(5, &[4])]).unwrap();
        let f = g.crossing_set(&p).unwrap();
        assert_eq!(f.edge_ids(), &[1, 3, 4]);
        assert_eq!(f.total_cost(), 3);
    }

    #[test]
    fn malformed_partitions_are_rejected() {
        assert!(VertexPartition::new(3, vec![set(3, &[0, 1, 2])]).is_err());
        assert!(VertexPartition::new(3, vec![set(3, &[0, 1]), set(3, &[1, 2])]).is_err());
        assert!(VertexPartition::new(3, vec![set(3, &[0]), set(3, &[1])]).is_err());
        assert!(VertexPartition::new(3, vec![set(3, &[0, 1, 2]), VertexSet::empty(3)]).is_err());
        let p = VertexPartition::from_labels(&[0, 1], 2).unwrap();
        assert!(cycle(4).crossing_set(&p).is_err());
    }

    #[test]
    fn components_after_removal_examples() {
        let g = spanning(5);
        let all = CutSet::from_edges(&g, [0]).unwrap();
        assert_eq!(g.components_after_removal(&all).unwrap().len(), 5);

        let g = cycle(4);
        let f = CutSet::from_edges(&g, [0, 2]).unwrap();
        let comps = g.components_after_removal(&f).unwrap();
        assert_eq!(comps, vec![set(4, &[0, 3]), set(4, &[1, 2])]);
        assert_eq!(g.count_components_after_removal(&f), 2);

        let g = Hypergraph::with_unit_costs(5, [vec![0, 4], vec![1, 2]]).unwrap();
        let comps = g.components_after_removal(&CutSet::empty()).unwrap();
        assert_eq!(comps, vec![set(5, &[0, 4]), set(5, &[1, 2]), set(5, &[3])]);
        assert_eq!(comps, g.components());
    }

    #[test]
    fn components_reject_unknown_edges() {
        let g = cycle(4);
        assert!(CutSet::from_edges(&g, [7]).is_err());
        let g2 = cycle(8);
        let foreign = CutSet::from_edges(&g2, [7]).unwrap();
        assert!(g.components_after_removal(&foreign).is_err());
    }

    #[test]
    fn induced_subhypergraph_examples() {
        let sub = spanning(5).induced_subhypergraph(&set(5, &[0])).unwrap();
        assert_eq!(sub.graph.num_vertices(), 4);
        assert_eq!(sub.graph.num_edges(), 0);

        let sub = cycle(4).induced_subhypergraph(&set(4, &[0])).unwrap();
        assert_eq!(sub.vertex_map, vec![1, 2, 3]);
        assert_eq!(sub.edge_map, vec![1, 2]);
        let edges: Vec<_> = sub.graph.edges().iter().map(|e| e.vertices().to_vec()).collect();
        assert_eq!(edges, vec![vec![0, 1], vec![1, 2]]);

        let g = Hypergraph::with_unit_costs(4, [vec![0, 1], vec![1, 2]]).unwrap();
        let sub = g.induced_subhypergraph(&set(4, &[3])).unwrap();
        assert_eq!(sub.graph.num_edges(), 2);
        assert_eq!(sub.graph.num_vertices(), 3);

        assert!(g.induced_subhypergraph(&VertexSet::full(4)).is_err());
    }

    #[test]
    fn vertex_set_order_is_lexicographic() {
        let a = set(6, &[0, 5]);
        let b = set(6, &[1]);
        let c = set(6, &[0]);
        assert!(c < a && a < b);
        // universe size does not affect identity
        assert_eq!(set(3, &[1]), set(200, &[1]));
    }
}
