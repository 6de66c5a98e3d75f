//! Exhaustive reference implementations used to validate the flow-based
//! algorithms on small instances.
//!
//! Nothing here touches the flow network: k-partitions are listed as
//! restricted-growth strings and terminal cuts by subset enumeration.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::enumerate::{EnumerationReport, Stats};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{CutSet, Hypergraph, VertexPartition, VertexSet};

/// Largest vertex count accepted by the k-partition oracle.
pub const MAX_PARTITION_VERTICES: usize = 12;
/// Largest vertex count accepted by the terminal-cut oracle.
pub const MAX_TERMINAL_VERTICES: usize = 16;

/// Calls `visit` with the label vector of every partition of `0..n` into
/// exactly `k` non-empty blocks. Labels form a restricted-growth string:
/// `labels[0] = 0` and each label is at most one more than every earlier one.
pub fn for_each_k_partition(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    fn go(labels: &mut [usize], i: usize, used: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
        let n = labels.len();
        if i == n {
            if used == k {
                visit(labels);
            }
            return;
        }
        // the remaining positions must be able to open the missing blocks
        if k - used > n - i {
            return;
        }
        for label in 0..=used.min(k - 1) {
            labels[i] = label;
            go(labels, i + 1, used.max(label + 1), k, visit);
        }
    }
    if k == 0 || k > n {
        return;
    }
    let mut labels = vec![0; n];
    go(&mut labels, 1, 1, k, &mut visit);
}

fn check_k(graph: &Hypergraph, k: usize) -> Result<()> {
    let n = graph.num_vertices();
    if n > MAX_PARTITION_VERTICES {
        return Err(Error::SizeLimit {
            what: "vertex count",
            actual: n,
            limit: MAX_PARTITION_VERTICES,
        });
    }
    if k < 2 || k > n {
        return invalid(format!("k must lie in 2..={n}, got {k}"));
    }
    Ok(())
}

/// Minimum k-cut-sets by scanning every k-partition.
///
/// Positive costs make this complete: every minimum k-cut-set is the crossing
/// set of some k-partition. In the report, `stats.candidate_sets` holds the
/// number of partitions scanned and `stats.candidate_cutsets` the number of
/// distinct crossing sets seen.
pub fn brute_force_min_k_cutsets(graph: &Hypergraph, k: usize) -> Result<EnumerationReport> {
    let started = Instant::now();
    check_k(graph, k)?;
    let mut scanned = 0u64;
    let mut distinct = BTreeSet::new();
    for_each_k_partition(graph.num_vertices(), k, |labels| {
        scanned += 1;
        distinct.insert(graph.crossing_set_of_labels(labels));
    });
    if graph.components().len() >= k {
        distinct.insert(CutSet::empty());
    }
    let opt_value = distinct.iter().map(CutSet::total_cost).min().unwrap_or(0);
    let family = distinct.iter().filter(|f| f.total_cost() == opt_value).cloned().collect();
    Ok(EnumerationReport {
        k,
        opt_value,
        family,
        stats: Stats {
            terminal_cut_calls: 0,
            candidate_sets: scanned,
            candidate_cutsets: distinct.len() as u64,
            millis: started.elapsed().as_millis() as u64,
        },
    })
}

/// Every k-partition of minimum cost, in restricted-growth order, with that
/// cost.
pub fn brute_force_min_k_partitions(graph: &Hypergraph, k: usize) -> Result<(u64, Vec<VertexPartition>)> {
    check_k(graph, k)?;
    let mut best = u64::MAX;
    let mut found: Vec<Vec<usize>> = Vec::new();
    for_each_k_partition(graph.num_vertices(), k, |labels| {
        let cost = graph.crossing_cost_of_labels(labels);
        if cost < best {
            best = cost;
            found.clear();
        }
        if cost == best {
            found.push(labels.to_vec());
        }
    });
    let partitions = found
        .iter()
        .map(|l| VertexPartition::from_labels(l, k))
        .collect::<Result<Vec<_>>>()?;
    Ok((best, partitions))
}

/// Every optimal source side `U` with `S ⊆ U ⊆ V \ T`, sorted.
pub fn brute_force_all_min_terminal_cuts(
    graph: &Hypergraph,
    sources: &VertexSet,
    sinks: &VertexSet,
) -> Result<Vec<VertexSet>> {
    let n = graph.num_vertices();
    if n > MAX_TERMINAL_VERTICES {
        return Err(Error::SizeLimit {
            what: "vertex count",
            actual: n,
            limit: MAX_TERMINAL_VERTICES,
        });
    }
    if sources.is_empty() || sinks.is_empty() {
        return invalid("terminal sets S and T must be non-empty");
    }
    if sources.iter().chain(sinks.iter()).any(|v| v >= n) {
        return invalid(format!("terminal vertex outside 0..{n}"));
    }
    if !sources.is_disjoint(sinks) {
        return invalid("terminal sets S and T must be disjoint");
    }
    let free: Vec<usize> = (0..n).filter(|&v| !sources.contains(v) && !sinks.contains(v)).collect();
    let mut best = u64::MAX;
    let mut sides = Vec::new();
    for mask in 0u32..(1u32 << free.len()) {
        let mut side = VertexSet::from_vertices(n, sources.iter());
        for (bit, &v) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                side.insert(v);
            }
        }
        let value = graph.cut_value_unchecked(&side);
        if value < best {
            best = value;
            sides.clear();
        }
        if value == best {
            sides.push(side);
        }
    }
    sides.sort();
    Ok(sides)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Hypergraph {
        Hypergraph::with_unit_costs(n, (0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn partition_counts_are_stirling_numbers() {
        // S(n, k) for small n, k
        let stirling = [(4, 2, 7), (5, 3, 25), (6, 3, 90), (7, 4, 350), (8, 2, 127), (3, 3, 1)];
        for (n, k, want) in stirling {
            let mut count = 0;
            let mut distinct = BTreeSet::new();
            for_each_k_partition(n, k, |labels| {
                count += 1;
                assert_eq!(labels[0], 0);
                assert_eq!(labels.iter().max().unwrap() + 1, k);
                distinct.insert(labels.to_vec());
            });
            assert_eq!(count, want, "S({n},{k})");
            assert_eq!(distinct.len(), want);
        }
    }

    #[test]
    fn spanning_hyperedge_scans_seven_partitions() {
        let g = Hypergraph::with_unit_costs(4, std::iter::once(0..4)).unwrap();
        let r = brute_force_min_k_cutsets(&g, 2).unwrap();
        assert_eq!(r.opt_value, 1);
        assert_eq!(r.family.len(), 1);
        assert_eq!(r.family[0].edge_ids(), &[0]);
        assert_eq!(r.stats.candidate_sets, 7);
    }

    #[test]
    fn cycle_four_has_six_min_cutsets() {
        let r = brute_force_min_k_cutsets(&cycle(4), 2).unwrap();
        assert_eq!(r.opt_value, 2);
        assert_eq!(r.family.len(), 6);
    }

    #[test]
    fn triangle_three_cut() {
        let r = brute_force_min_k_cutsets(&cycle(3), 3).unwrap();
        assert_eq!(r.opt_value, 3);
        assert_eq!(r.family.len(), 1);
        assert_eq!(r.family[0].edge_ids(), &[0, 1, 2]);
    }

    #[test]
    fn size_guard() {
        let g = cycle(13);
        assert!(matches!(brute_force_min_k_cutsets(&g, 2), Err(Error::SizeLimit { .. })));
        let g = cycle(17);
        assert!(matches!(
            brute_force_all_min_terminal_cuts(&g, &set(17, &[0]), &set(17, &[1])),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn terminal_cut_examples() {
        let g = Hypergraph::with_unit_costs(5, std::iter::once(0..5)).unwrap();
        let sides = brute_force_all_min_terminal_cuts(&g, &set(5, &[0]), &set(5, &[1])).unwrap();
        assert_eq!(sides.len(), 8);
        assert!(sides.iter().all(|s| s.contains(0) && !s.contains(1)));

        let sides = brute_force_all_min_terminal_cuts(&cycle(4), &set(4, &[0]), &set(4, &[2])).unwrap();
        assert_eq!(sides, vec![set(4, &[0]), set(4, &[0, 1]), set(4, &[0, 1, 3]), set(4, &[0, 3])]);
    }

    #[test]
    fn min_partitions_of_path() {
        let g = Hypergraph::with_unit_costs(3, [vec![0, 1], vec![1, 2]]).unwrap();
        let (cost, parts) = brute_force_min_k_partitions(&g, 2).unwrap();
        assert_eq!(cost, 1);
        assert_eq!(parts.len(), 2);
    }
}
