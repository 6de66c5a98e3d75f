//! Corpus-driven runs of the structural checks.
//!
//! Hypotheses are mined per instance: minimum cuts and partitions come from
//! the brute-force oracle, uncrossing inputs from seeded random samples
//! filtered by their premise. Instances are processed in parallel and the
//! results merged in instance order, so the summary does not depend on the
//! thread count.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumerate::min_k_cut_value;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexPartition, VertexSet};
use crate::io::emit_instance;
use crate::io::report::SCHEMA_VERSION;
use crate::oracle::{brute_force_min_k_partitions, MAX_PARTITION_VERTICES};
use crate::structure::{
    aggregate, check_containment_lemma, check_uncrossing_lemma, check_unique_terminal_witness_with_opt,
    find_witness_general, find_witness_k2, minimum_uncrossing_cuts, sigma, uncross,
};
use crate::subsets::small_subsets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Size-2 witnesses for every minimum cut and every sink set inside its
    /// other side.
    K2,
    /// k = 3 witnesses, unique terminal witnesses for cuts below `OPT_k`
    /// (k = 2, 3) and the containment property (k = 2, 3).
    General,
    /// Uncrossing bound, p = 2 equality and the sigma identity.
    Uncross,
    /// Aggregation of uncrossed partitions into k = 2 and k = 3 parts.
    Aggregate,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::K2, Suite::General, Suite::Uncross, Suite::Aggregate];

    fn needs_oracle(self) -> bool {
        matches!(self, Suite::K2 | Suite::General)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::K2 => "k2",
            Suite::General => "general",
            Suite::Uncross => "uncross",
            Suite::Aggregate => "aggregate",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}', expected k2|general|uncross|aggregate")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub suites: Vec<Suite>,
    /// Sink sets tried per mined k = 3 partition (and per containment
    /// hypothesis), taken in bitmask order.
    pub max_sink_sets: usize,
    /// Random `(U, R, S)` samples drawn per instance for the uncrossing
    /// suites.
    pub uncross_samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suites: Suite::ALL.to_vec(),
            max_sink_sets: 128,
            uncross_samples: 64,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub suite: Suite,
    pub check: &'static str,
    pub hypotheses: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub instance_index: usize,
    pub suite: Suite,
    pub check: &'static str,
    /// The instance in file format.
    pub instance: String,
    pub detail: Value,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EmptyParts {
    /// Uncrossed partitions whose premise held.
    pub partitions: u64,
    /// Of those, partitions with at least one empty `Y_i`.
    pub with_empty_y: u64,
    pub empty_y_parts: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub schema_version: u32,
    pub instances: usize,
    pub passed: bool,
    pub checks: Vec<CheckSummary>,
    pub empty_parts: EmptyParts,
    pub first_failure: Option<Failure>,
}

impl VerifySummary {
    pub fn to_json(&self) -> String {
        crate::io::report::to_json(self)
    }

    pub fn check(&self, suite: Suite, check: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.suite == suite && c.check == check)
    }
}

struct Recorder<'g> {
    index: usize,
    graph: &'g Hypergraph,
    checks: Vec<CheckSummary>,
    empty_parts: EmptyParts,
    failure: Option<Failure>,
}

impl<'g> Recorder<'g> {
    fn new(index: usize, graph: &'g Hypergraph) -> Self {
        Recorder {
            index,
            graph,
            checks: Vec::new(),
            empty_parts: EmptyParts::default(),
            failure: None,
        }
    }

    fn declare(&mut self, suite: Suite, check: &'static str) {
        if !self.checks.iter().any(|c| c.suite == suite && c.check == check) {
            self.checks.push(CheckSummary {
                suite,
                check,
                hypotheses: 0,
                passed: 0,
                failed: 0,
            });
        }
    }

    fn record(&mut self, suite: Suite, check: &'static str, ok: bool, detail: impl FnOnce() -> Value) {
        self.declare(suite, check);
        let entry = self
            .checks
            .iter_mut()
            .find(|c| c.suite == suite && c.check == check)
            .expect("declared above");
        entry.hypotheses += 1;
        if ok {
            entry.passed += 1;
        } else {
            entry.failed += 1;
            if self.failure.is_none() {
                self.failure = Some(Failure {
                    instance_index: self.index,
                    suite,
                    check,
                    instance: emit_instance(self.graph),
                    detail: detail(),
                });
            }
        }
    }

    fn record_result<T>(
        &mut self,
        suite: Suite,
        check: &'static str,
        outcome: Result<T>,
        ok: impl FnOnce(&T) -> bool,
        detail: impl FnOnce(Option<&T>) -> Value,
    ) {
        match outcome {
            Ok(value) => {
                let passed = ok(&value);
                self.record(suite, check, passed, || detail(Some(&value)));
            }
            Err(e) => self.record(suite, check, false, || {
                let mut d = detail(None);
                d["error"] = json!(e.to_string());
                d
            }),
        }
    }
}

/// Runs the selected suites on every instance.
pub fn verify_corpus(graphs: &[Hypergraph], options: &VerifyOptions) -> Result<VerifySummary> {
    if options.suites.iter().any(|s| s.needs_oracle()) {
        if let Some(g) = graphs.iter().find(|g| g.num_vertices() > MAX_PARTITION_VERTICES) {
            return Err(Error::SizeLimit {
                what: "vertices for oracle-mined suites",
                actual: g.num_vertices(),
                limit: MAX_PARTITION_VERTICES,
            });
        }
    }
    let mut suites = options.suites.clone();
    suites.sort();
    suites.dedup();

    let outcomes: Vec<Recorder> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, graph)| {
            let mut rec = Recorder::new(index, graph);
            for &suite in &suites {
                match suite {
                    Suite::K2 => run_k2(&mut rec),
                    Suite::General => run_general(&mut rec, options),
                    Suite::Uncross | Suite::Aggregate => {}
                }
            }
            if suites.contains(&Suite::Uncross) || suites.contains(&Suite::Aggregate) {
                run_uncrossing(&mut rec, options, &suites);
            }
            rec
        })
        .collect();

    let mut checks: Vec<CheckSummary> = Vec::new();
    let mut empty_parts = EmptyParts::default();
    let mut first_failure = None;
    for rec in outcomes {
        for c in rec.checks {
            match checks.iter_mut().find(|x| x.suite == c.suite && x.check == c.check) {
                Some(x) => {
                    x.hypotheses += c.hypotheses;
                    x.passed += c.passed;
                    x.failed += c.failed;
                }
                None => checks.push(c),
            }
        }
        empty_parts.partitions += rec.empty_parts.partitions;
        empty_parts.with_empty_y += rec.empty_parts.with_empty_y;
        empty_parts.empty_y_parts += rec.empty_parts.empty_y_parts;
        if first_failure.is_none() {
            first_failure = rec.failure;
        }
    }
    checks.sort_by_key(|c| c.suite);
    Ok(VerifySummary {
        schema_version: SCHEMA_VERSION,
        instances: graphs.len(),
        passed: checks.iter().all(|c| c.failed == 0),
        checks,
        empty_parts,
        first_failure,
    })
}

/// Non-empty subsets of `pool` in increasing bitmask order that satisfy
/// `keep`, at most `cap` of them.
fn sink_sets(n: usize, pool: &VertexSet, cap: usize, keep: impl Fn(&VertexSet) -> bool) -> Vec<VertexSet> {
    let members = pool.to_vec();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << members.len()) {
        if out.len() == cap {
            break;
        }
        let t = VertexSet::from_vertices(n, members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
        if keep(&t) {
            out.push(t);
        }
    }
    out
}

fn sets_json(sets: &[VertexSet]) -> Value {
    json!(sets.iter().map(VertexSet::to_vec).collect::<Vec<_>>())
}

fn run_k2(rec: &mut Recorder) {
    let g = rec.graph;
    let n = g.num_vertices();
    rec.declare(Suite::K2, "witness_k2");
    if n < 2 {
        return;
    }
    let (_, partitions) = brute_force_min_k_partitions(g, 2).expect("size checked by the caller");
    for p in &partitions {
        for side in 0..2 {
            let v1 = &p.parts()[side];
            let v2 = &p.parts()[1 - side];
            for t in sink_sets(n, v2, usize::MAX, |_| true) {
                let outcome = find_witness_k2(g, v1, &t);
                rec.record_result(
                    Suite::K2,
                    "witness_k2",
                    outcome,
                    |w| w.is_some(),
                    |_| json!({ "v1": v1.to_vec(), "sinks": t.to_vec() }),
                );
            }
        }
    }
}

/// `partition` reordered so that `parts[first]` comes first.
fn with_first(partition: &VertexPartition, first: usize) -> VertexPartition {
    let mut parts = partition.parts().to_vec();
    let v1 = parts.remove(first);
    parts.insert(0, v1);
    VertexPartition::new(partition.num_vertices(), parts).expect("reordering keeps a valid partition")
}

/// Minimum k-partitions reordered to put first each part whose crossing set
/// equals that of the whole partition.
fn mined_partitions(g: &Hypergraph, k: usize) -> Vec<VertexPartition> {
    if g.num_vertices() < k {
        return Vec::new();
    }
    let (_, partitions) = brute_force_min_k_partitions(g, k).expect("size checked by the caller");
    let mut out = Vec::new();
    for p in &partitions {
        let crossing = g.crossing_set(p).expect("oracle partitions are valid");
        for (i, part) in p.parts().iter().enumerate() {
            if g.cut_set_unchecked(part) == crossing {
                out.push(with_first(p, i));
            }
        }
    }
    out
}

fn hitting_sinks(p: &VertexPartition, cap: usize) -> Vec<VertexSet> {
    let n = p.num_vertices();
    let outside = p.parts()[0].complement();
    sink_sets(n, &outside, cap, |t| p.parts()[1..].iter().all(|part| !part.is_disjoint(t)))
}

fn run_general(rec: &mut Recorder, options: &VerifyOptions) {
    let g = rec.graph;
    let n = g.num_vertices();
    for check in ["witness_general", "unique_witness", "containment"] {
        rec.declare(Suite::General, check);
    }

    for p in mined_partitions(g, 3) {
        for t in hitting_sinks(&p, options.max_sink_sets) {
            let outcome = find_witness_general(g, &p, &t);
            rec.record_result(
                Suite::General,
                "witness_general",
                outcome,
                |w| w.is_some(),
                |_| json!({ "partition": sets_json(p.parts()), "sinks": t.to_vec() }),
            );
        }
    }

    for k in 2..=3usize.min(n) {
        let opt = min_k_cut_value(g, k).expect("2 <= k <= n");
        for mask in 1u64..(1u64 << n) - 1 {
            let u = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            if g.cut_value_unchecked(&u) >= opt {
                continue;
            }
            let outcome = check_unique_terminal_witness_with_opt(g, &u, k, opt);
            rec.record_result(
                Suite::General,
                "unique_witness",
                outcome,
                |v| v.found(),
                |_| json!({ "k": k, "u": u.to_vec(), "opt": opt }),
            );
        }
    }

    for k in 2..=3 {
        for p in mined_partitions(g, k) {
            let v1 = &p.parts()[0];
            let mut sources: Vec<VertexSet> = small_subsets(&v1.to_vec(), 2)
                .into_iter()
                .map(|s| VertexSet::from_vertices(n, s))
                .collect();
            if v1.len() > 2 {
                sources.push(v1.clone());
            }
            for t in hitting_sinks(&p, options.max_sink_sets) {
                for s in &sources {
                    let outcome = check_containment_lemma(g, &p, s, &t);
                    rec.record_result(
                        Suite::General,
                        "containment",
                        outcome,
                        |v| v.holds(),
                        |v| {
                            json!({
                                "partition": sets_json(p.parts()),
                                "sources": s.to_vec(),
                                "sinks": t.to_vec(),
                                "verdict": v,
                            })
                        },
                    );
                }
            }
        }
    }
}

/// Random `(U, R, S)` with `∅ ≠ R`, `S ∩ R = ∅`, `R ∪ S ⊊ U ⊊ V`,
/// `2 <= |S| <= 5`.
fn sample_uncrossing_input(rng: &mut ChaCha8Rng, n: usize) -> (VertexSet, VertexSet, Vec<usize>) {
    let p = rng.gen_range(2..=5.min(n - 2));
    let size = rng.gen_range(p + 1..=n - 1);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let members = &vertices[..size];
    let r_size = rng.gen_range(1..=size - p);
    let s = members[..p].to_vec();
    let r = VertexSet::from_vertices(n, members[p..p + r_size].iter().copied());
    (VertexSet::from_vertices(n, members.iter().copied()), r, s)
}

fn run_uncrossing(rec: &mut Recorder, options: &VerifyOptions, suites: &[Suite]) {
    let g = rec.graph;
    let n = g.num_vertices();
    let want_uncross = suites.contains(&Suite::Uncross);
    let want_aggregate = suites.contains(&Suite::Aggregate);
    if want_uncross {
        for check in ["uncrossing", "uncrossing_p2_equality", "sigma_identity"] {
            rec.declare(Suite::Uncross, check);
        }
    }
    if want_aggregate {
        rec.declare(Suite::Aggregate, "aggregation");
    }
    if n < 4 {
        return;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ (rec.index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for _ in 0..options.uncross_samples {
        let (u, r, s) = sample_uncrossing_input(&mut rng, n);
        let sink_sides = minimum_uncrossing_cuts(g, &u, &r, &s).expect("sampled sources and sinks are disjoint");
        let input = || json!({ "u": u.to_vec(), "r": r.to_vec(), "s": s, "sink_sides": sets_json(&sink_sides) });

        if want_uncross {
            let partition = uncross(g, &u, &sink_sides).expect("sink sides contain V \\ U");
            let b = sigma(g, &partition);
            let ok = partition.is_partition_of(n) && b.sigma == b.cost_partition + b.cost_wz + b.alpha + b.beta;
            rec.record(Suite::Uncross, "sigma_identity", ok, || json!({ "input": input(), "sigma": b }));
        }

        let verdict = check_uncrossing_lemma(g, &u, &r, &s, &sink_sides);
        if !verdict.hypothesis_holds {
            continue;
        }
        let partition = verdict.partition.as_ref().expect("set when the premise holds");
        rec.empty_parts.partitions += 1;
        let empty = partition.empty_y_parts() as u64;
        if empty > 0 {
            rec.empty_parts.with_empty_y += 1;
            rec.empty_parts.empty_y_parts += empty;
        }

        if want_uncross {
            rec.record(Suite::Uncross, "uncrossing", verdict.inequality_holds, || {
                json!({ "input": input(), "verdict": verdict })
            });
            if s.len() == 2 {
                rec.record(Suite::Uncross, "uncrossing_p2_equality", verdict.equality_when_p2, || {
                    json!({ "input": input(), "verdict": verdict })
                });
            }
        }
        if want_aggregate {
            let p = partition.p();
            for k in [2usize, 3] {
                if p < 2 * k - 2 {
                    continue;
                }
                let outcome = aggregate(g, partition, k);
                rec.record_result(
                    Suite::Aggregate,
                    "aggregation",
                    outcome,
                    |a| a.holds,
                    |a| json!({ "input": input(), "k": k, "aggregation": a }),
                );
            }
        }
    }
}
