//! Instance generators: cycles, a single spanning hyperedge, and seeded
//! random hypergraphs.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceKind {
    /// Unit-cost cycle `{i, i + 1 mod n}`.
    Cycle { n: usize },
    /// One unit-cost hyperedge containing every vertex.
    Spanning { n: usize },
    Random(RandomParams),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomParams {
    pub n: usize,
    pub m: usize,
    pub max_size: usize,
    pub max_cost: u64,
    pub seed: u64,
}

pub fn generate(kind: &InstanceKind) -> Result<Hypergraph> {
    match kind {
        InstanceKind::Cycle { n } => cycle(*n),
        InstanceKind::Spanning { n } => spanning(*n),
        InstanceKind::Random(p) => random(p),
    }
}

pub fn cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return invalid(format!("a cycle needs at least 3 vertices, got {n}"));
    }
    Hypergraph::with_unit_costs(n, (0..n).map(|i| [i, (i + 1) % n]))
}

pub fn spanning(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return invalid(format!("a spanning hyperedge needs at least 2 vertices, got {n}"));
    }
    Hypergraph::with_unit_costs(n, std::iter::once(0..n))
}

/// Hyperedge sizes are uniform in `2..=min(max_size, n)`, members are a
/// uniform sample without repetition, costs are uniform in `1..=max_cost`.
pub fn random(params: &RandomParams) -> Result<Hypergraph> {
    let RandomParams {
        n,
        m,
        max_size,
        max_cost,
        seed,
    } = *params;
    if n < 2 {
        return invalid(format!("random instances need at least 2 vertices, got {n}"));
    }
    if max_size < 2 {
        return invalid(format!("max hyperedge size must be at least 2, got {max_size}"));
    }
    if max_cost < 1 {
        return invalid("max cost must be at least 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = max_size.min(n);
    let edges: Vec<(Vec<usize>, u64)> = (0..m)
        .map(|_| {
            let size = rng.gen_range(2..=top);
            let mut members = sample(&mut rng, n, size).into_vec();
            members.sort_unstable();
            (members, rng.gen_range(1..=max_cost))
        })
        .collect();
    Hypergraph::new(n, edges)
}

/// Parameters of a seeded family of random instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub vertices: RangeInclusive<usize>,
    pub edges: RangeInclusive<usize>,
    pub max_size: usize,
    pub max_cost: u64,
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    /// `count` instances with exactly `n` vertices and `m` hyperedges,
    /// hyperedge sizes up to 5 and costs up to 5.
    pub fn fixed(n: usize, m: usize, count: usize, seed: u64) -> Self {
        CorpusSpec {
            vertices: n..=n,
            edges: m..=m,
            max_size: 5,
            max_cost: 5,
            count,
            seed,
        }
    }
}

/// Draws `count` instances; vertex and hyperedge counts are drawn per
/// instance from the given ranges. The same spec always yields the same
/// corpus.
pub fn random_corpus(spec: &CorpusSpec) -> Result<Vec<Hypergraph>> {
    if spec.vertices.is_empty() || spec.edges.is_empty() {
        return invalid("empty vertex or hyperedge count range");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let params = RandomParams {
                n: rng.gen_range(spec.vertices.clone()),
                m: rng.gen_range(spec.edges.clone()),
                max_size: spec.max_size,
                max_cost: spec.max_cost,
                seed: rng.gen(),
            };
            random(&params)
        })
        .collect()
}
