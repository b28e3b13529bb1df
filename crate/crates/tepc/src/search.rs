//! Exhaustive enumeration of all 2^|E| edge labelings of a small graph:
//! find the first balanced labeling, count all of them, or certify that none
//! exists.
//!
//! Labelings pack into a machine word, one bit per canonical edge index, and
//! enumeration walks the reflected binary (Gray) sequence so consecutive
//! labelings differ in a single edge. A flip touches one edge counter and at
//! most two per-vertex counters, so each step costs O(1) instead of
//! O(|E| + |V|).
//!
//! The canonical enumeration order is Gray order: step `i` visits the mask
//! `i ^ (i >> 1)`. Parallel runs shard the space by fixing the top `k` bits
//! per block of 2^(|E|-k) consecutive steps (those bits are constant within
//! a block), and the merged result is the witness with the smallest step
//! index, so reports do not depend on the worker count.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{EdgeLabeling, Tally};

/// Default cap on |E| for exhaustive runs (~16.8M labelings).
pub const DEFAULT_EDGE_BUDGET: usize = 24;

/// Hard architectural cap: step indices and masks live in a u64.
const MAX_EDGE_BITS: usize = 62;

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Refuse graphs with more edges than this; enumeration never samples.
    pub edge_budget: usize,
    /// Worker threads. The report is identical for every value.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            edge_budget: DEFAULT_EDGE_BUDGET,
            jobs: 1,
        }
    }
}

/// Outcome of an enumeration run.
#[derive(Debug, Clone)]
pub struct SearchReport {
    graph_fingerprint: u64,
    pub edge_count: usize,
    /// Length of the canonical-order prefix this conclusion required: the
    /// witness position + 1 on early exit, 2^|E| when exhaustive.
    pub labelings_examined: u64,
    /// First balanced labeling in canonical order, if one exists.
    pub witness: Option<EdgeLabeling>,
    /// Exact number of balanced labelings; `Some(0)` certifies none exist.
    pub tepc_count: Option<u64>,
    pub exhaustive: bool,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn binds(&self, graph: &Graph) -> bool {
        self.graph_fingerprint == graph.fingerprint()
    }

    /// Equality of everything except wall-clock time; the determinism
    /// contract for repeated and multi-worker runs.
    pub fn same_outcome(&self, other: &SearchReport) -> bool {
        self.graph_fingerprint == other.graph_fingerprint
            && self.edge_count == other.edge_count
            && self.labelings_examined == other.labelings_examined
            && self.witness == other.witness
            && self.tepc_count == other.tepc_count
            && self.exhaustive == other.exhaustive
    }
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Tally of a mask labeling, maintained under single-bit flips.
///
/// Per vertex it tracks the number of incident 0-edges; the induced label is
/// 1 exactly when that counter is zero, so a flip updates the vertex counts
/// without rescanning adjacency.
pub struct IncrementalTally<'g> {
    graph: &'g Graph,
    mask: u64,
    zero_incident: Vec<u32>,
    e0: usize,
    v0: usize,
}

impl<'g> IncrementalTally<'g> {
    pub fn new(graph: &'g Graph, mask: u64) -> Self {
        let mut zero_incident = vec![0u32; graph.vertex_count()];
        let mut e0 = 0;
        for (idx, &(a, b)) in graph.edges().iter().enumerate() {
            if mask >> idx & 1 == 0 {
                e0 += 1;
                zero_incident[a] += 1;
                zero_incident[b] += 1;
            }
        }
        let v0 = zero_incident.iter().filter(|&&c| c > 0).count();
        IncrementalTally {
            graph,
            mask,
            zero_incident,
            e0,
            v0,
        }
    }

    /// Flips the label of one edge and updates the counts in O(1).
    #[inline]
    pub fn flip(&mut self, edge_index: usize) {
        let (a, b) = self.graph.edges()[edge_index];
        let was_one = self.mask >> edge_index & 1 == 1;
        self.mask ^= 1 << edge_index;
        if was_one {
            // 1 -> 0: one more zero edge, endpoints gain a zero incidence.
            self.e0 += 1;
            for v in [a, b] {
                self.zero_incident[v] += 1;
                if self.zero_incident[v] == 1 {
                    self.v0 += 1;
                }
            }
        } else {
            self.e0 -= 1;
            for v in [a, b] {
                self.zero_incident[v] -= 1;
                if self.zero_incident[v] == 0 {
                    self.v0 -= 1;
                }
            }
        }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn tally(&self) -> Tally {
        Tally {
            e0: self.e0,
            e1: self.graph.edge_count() - self.e0,
            v0: self.v0,
            v1: self.graph.vertex_count() - self.v0,
        }
    }

    #[inline]
    pub fn gap(&self) -> i64 {
        2 * (self.v0 + self.e0) as i64
            - (self.graph.vertex_count() + self.graph.edge_count()) as i64
    }

    #[inline]
    pub fn is_balanced(&self) -> bool {
        self.gap().abs() <= 1
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    FirstWitness,
    CountAll,
}

/// Per-worker scan of one shard: steps `start..end` of the Gray walk.
/// Returns (balanced count, smallest balanced step index).
fn scan_block(
    graph: &Graph,
    start: u64,
    end: u64,
    mode: Mode,
    best: &AtomicU64,
) -> (u64, u64) {
    let mut state = IncrementalTally::new(graph, gray(start));
    let mut count = 0u64;
    let mut first = u64::MAX;
    let mut i = start;
    loop {
        if state.is_balanced() {
            match mode {
                Mode::FirstWitness => {
                    best.fetch_min(i, Ordering::Relaxed);
                    return (0, i);
                }
                Mode::CountAll => {
                    count += 1;
                    if first == u64::MAX {
                        first = i;
                    }
                }
            }
        }
        i += 1;
        if i == end {
            return (count, first);
        }
        // Steps stay inside the block: trailing_zeros(i) < block bits.
        state.flip(i.trailing_zeros() as usize);
        if mode == Mode::FirstWitness && i & 0xFFF == 0 && i > best.load(Ordering::Relaxed) {
            return (0, u64::MAX);
        }
    }
}

fn run(graph: &Graph, opts: &SearchOptions, mode: Mode) -> Result<SearchReport> {
    let e = graph.edge_count();
    let budget = opts.edge_budget.min(MAX_EDGE_BITS);
    if e > budget {
        return Err(Error::UnsupportedSize {
            what: "edge count for exhaustive enumeration",
            actual: e,
            limit: budget,
        });
    }
    let started = Instant::now();
    let total = 1u64 << e;
    let jobs = opts.jobs.max(1);

    // Shards fix the top k mask bits; keep at least a few blocks per worker
    // for balance, but never more than 2^12 blocks.
    let shard_bits = if jobs == 1 {
        0
    } else {
        let mut k = 0;
        while (1usize << k) < jobs * 4 && k < 12 && k < e {
            k += 1;
        }
        k
    };
    let blocks = 1u64 << shard_bits;
    let block_len = total >> shard_bits;

    let best = AtomicU64::new(u64::MAX);
    let next_block = AtomicU64::new(0);

    let work = |count_acc: &mut u64, first_acc: &mut u64| loop {
        let b = next_block.fetch_add(1, Ordering::Relaxed);
        if b >= blocks {
            break;
        }
        let start = b * block_len;
        if mode == Mode::FirstWitness && start > best.load(Ordering::Relaxed) {
            continue;
        }
        let (count, first) = scan_block(graph, start, start + block_len, mode, &best);
        *count_acc += count;
        *first_acc = (*first_acc).min(first);
    };

    let (count, first_index) = if jobs == 1 || blocks == 1 {
        let (mut count, mut first) = (0u64, u64::MAX);
        work(&mut count, &mut first);
        (count, first)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|_| {
                    scope.spawn(|| {
                        let (mut count, mut first) = (0u64, u64::MAX);
                        work(&mut count, &mut first);
                        (count, first)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .fold((0u64, u64::MAX), |(c, f), (wc, wf)| (c + wc, f.min(wf)))
        })
    };

    let elapsed = started.elapsed();
    let witness_index = match mode {
        Mode::FirstWitness => best.load(Ordering::Relaxed),
        Mode::CountAll => first_index,
    };
    let witness = (witness_index != u64::MAX)
        .then(|| EdgeLabeling::from_mask(graph, gray(witness_index)));

    let (examined, tepc_count) = match mode {
        Mode::CountAll => (total, Some(count)),
        Mode::FirstWitness => match witness_index {
            u64::MAX => (total, Some(0)),
            idx => (idx + 1, None),
        },
    };
    Ok(SearchReport {
        graph_fingerprint: graph.fingerprint(),
        edge_count: e,
        labelings_examined: examined,
        witness,
        tepc_count,
        exhaustive: examined == total,
        elapsed,
    })
}

/// First balanced labeling in canonical order, or an exhaustive certificate
/// that none exists (`tepc_count == Some(0)`).
pub fn find_tepc(graph: &Graph, edge_budget: usize) -> Result<SearchReport> {
    find_tepc_with(
        graph,
        &SearchOptions {
            edge_budget,
            jobs: 1,
        },
    )
}

pub fn find_tepc_with(graph: &Graph, opts: &SearchOptions) -> Result<SearchReport> {
    run(graph, opts, Mode::FirstWitness)
}

/// Exact number of balanced labelings among all 2^|E|.
pub fn count_tepc(graph: &Graph, edge_budget: usize) -> Result<SearchReport> {
    count_tepc_with(
        graph,
        &SearchOptions {
            edge_budget,
            jobs: 1,
        },
    )
}

pub fn count_tepc_with(graph: &Graph, opts: &SearchOptions) -> Result<SearchReport> {
    run(graph, opts, Mode::CountAll)
}

/// Exhaustive non-existence certificate. Fails with
/// [`Error::WitnessFound`] if the graph does admit a balanced labeling.
pub fn certify_not_tepc(graph: &Graph) -> Result<SearchReport> {
    let report = find_tepc(graph, DEFAULT_EDGE_BUDGET)?;
    if report.witness.is_some() {
        return Err(Error::WitnessFound(Box::new(report)));
    }
    Ok(report)
}
