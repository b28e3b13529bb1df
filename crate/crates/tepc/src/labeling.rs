//! Edge labelings over {0,1}, the induced vertex labeling (product of
//! incident edge labels), and the balance tally that decides whether a
//! labeling is total edge product cordial.
//!
//! Over {0,1} the product is conjunction: a vertex is labeled 1 exactly when
//! every incident edge is labeled 1, and an isolated vertex gets the empty
//! product 1. A labeling is TEPC when the number of 0-labeled elements
//! (vertices plus edges) and 1-labeled elements differ by at most one.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total assignment of a bit to every edge of one specific graph.
///
/// Labels are stored by canonical edge index. The labeling remembers the
/// fingerprint of the graph it was built for; operations reject a labeling
/// presented with any other graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    fingerprint: u64,
    bits: Vec<u8>,
}

impl EdgeLabeling {
    pub fn new(graph: &Graph, bits: Vec<u8>) -> Result<Self> {
        if bits.len() != graph.edge_count() {
            return Err(Error::BindingMismatch(format!(
                "labeling has {} labels, graph has {} edges",
                bits.len(),
                graph.edge_count()
            )));
        }
        if let Some(bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidParameter(format!(
                "edge label {bad} is not a bit"
            )));
        }
        Ok(EdgeLabeling {
            fingerprint: graph.fingerprint(),
            bits,
        })
    }

    /// Labels every edge with the same bit.
    pub fn constant(graph: &Graph, bit: u8) -> Result<Self> {
        Self::new(graph, vec![bit; graph.edge_count()])
    }

    /// Builds the labeling by evaluating `rule` on every edge in canonical
    /// order. The rule must return a bit.
    pub fn from_fn(graph: &Graph, mut rule: impl FnMut(usize, (usize, usize)) -> u8) -> Self {
        let bits = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(idx, &e)| {
                let bit = rule(idx, e);
                debug_assert!(bit <= 1);
                bit
            })
            .collect();
        EdgeLabeling {
            fingerprint: graph.fingerprint(),
            bits,
        }
    }

    /// Unpacks a bitmask into a labeling; bit `i` of `mask` labels edge `i`.
    /// Requires at most 64 edges.
    pub fn from_mask(graph: &Graph, mask: u64) -> Self {
        assert!(graph.edge_count() <= 64, "mask labelings need <= 64 edges");
        let bits = (0..graph.edge_count())
            .map(|i| (mask >> i & 1) as u8)
            .collect();
        EdgeLabeling {
            fingerprint: graph.fingerprint(),
            bits,
        }
    }

    pub fn binds(&self, graph: &Graph) -> bool {
        self.fingerprint == graph.fingerprint()
    }

    pub fn bit(&self, edge_index: usize) -> u8 {
        self.bits[edge_index]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    fn check_binding(&self, graph: &Graph) -> Result<()> {
        if self.binds(graph) {
            Ok(())
        } else {
            Err(Error::BindingMismatch(
                "labeling was built for a different graph".into(),
            ))
        }
    }
}

/// Vertex labels induced by an edge labeling; never constructed directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    bits: Vec<u8>,
}

impl VertexLabeling {
    pub fn bit(&self, vertex: usize) -> u8 {
        self.bits[vertex]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }
}

/// The four element counts of a labeled graph plus the signed balance gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub e0: usize,
    pub e1: usize,
    pub v0: usize,
    pub v1: usize,
}

impl Tally {
    /// Signed gap `(v0 + e0) - (v1 + e1)`. The balance condition is
    /// `|gap| <= 1`; keeping the sign makes failures diagnosable.
    pub fn gap(&self) -> i64 {
        (self.v0 + self.e0) as i64 - (self.v1 + self.e1) as i64
    }

    pub fn is_balanced(&self) -> bool {
        self.gap().abs() <= 1
    }
}

/// Vertex labels induced by products of incident edge labels.
pub fn induced_vertex_labels(graph: &Graph, labeling: &EdgeLabeling) -> Result<VertexLabeling> {
    labeling.check_binding(graph)?;
    let mut bits = vec![1u8; graph.vertex_count()];
    for (idx, &(a, b)) in graph.edges().iter().enumerate() {
        if labeling.bit(idx) == 0 {
            bits[a] = 0;
            bits[b] = 0;
        }
    }
    Ok(VertexLabeling { bits })
}

/// Counts 0/1 edge labels and 0/1 induced vertex labels.
pub fn tally(graph: &Graph, labeling: &EdgeLabeling) -> Result<Tally> {
    let vertex_labels = induced_vertex_labels(graph, labeling)?;
    let e1 = labeling.bits().iter().map(|&b| b as usize).sum::<usize>();
    let v1 = vertex_labels.bits().iter().map(|&b| b as usize).sum::<usize>();
    Ok(Tally {
        e0: graph.edge_count() - e1,
        e1,
        v0: graph.vertex_count() - v1,
        v1,
    })
}

/// True when the labeling is total edge product cordial for `graph`.
pub fn is_tepc(graph: &Graph, labeling: &EdgeLabeling) -> Result<bool> {
    Ok(tally(graph, labeling)?.is_balanced())
}
