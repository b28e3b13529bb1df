//! The JSON documents the toolkit reads and writes: graph files, labeling
//! files, tally verdicts, and search reports.
//!
//! Graph documents list edges in canonical order (smaller endpoint first,
//! lexicographically sorted) because labeling documents address edges by
//! position. Parsing rejects out-of-order edge lists instead of silently
//! reordering them, which would reinterpret the labels.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Role};
use crate::labeling::{EdgeLabeling, Tally};
use crate::search::SearchReport;

/// `{"vertex_count": n, "edges": [[a,b],...], "roles": {"0": "spine(1)", ...}}`
///
/// `roles` is omitted when every vertex is plain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub roles: BTreeMap<usize, String>,
}

impl GraphDoc {
    pub fn from_graph(graph: &Graph) -> Self {
        let roles = graph
            .roles()
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != Role::Plain)
            .map(|(v, r)| (v, r.to_string()))
            .collect();
        GraphDoc {
            vertex_count: graph.vertex_count(),
            edges: graph.edges().to_vec(),
            roles,
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        for window in self.edges.windows(2) {
            if window[0] >= window[1] {
                return Err(Error::Format(format!(
                    "edges [{},{}] and [{},{}] are not in canonical order",
                    window[0].0, window[0].1, window[1].0, window[1].1
                )));
            }
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a >= b) {
            return Err(Error::Format(format!(
                "edge [{a},{b}] is not smaller-endpoint-first"
            )));
        }
        let mut graph = Graph::new(self.vertex_count, self.edges.iter().copied())?;
        for (&v, tag) in &self.roles {
            if v >= self.vertex_count {
                return Err(Error::Format(format!("role for unknown vertex {v}")));
            }
            graph.set_role(v, tag.parse()?);
        }
        Ok(graph)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph doc serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Reads and validates a graph document from a file.
pub fn read_graph(path: &Path) -> Result<Graph> {
    GraphDoc::from_json(&std::fs::read_to_string(path)?)?.to_graph()
}

pub fn write_graph(path: &Path, graph: &Graph) -> Result<()> {
    std::fs::write(path, GraphDoc::from_graph(graph).to_json() + "\n")?;
    Ok(())
}

/// The graph a labeling applies to: inline document or a path to one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GraphRef {
    Path(String),
    Inline(GraphDoc),
}

// Hand-written to keep the integer-keyed roles map working: serde's untagged
// buffering turns map keys into plain strings, which GraphDoc's usize keys
// cannot be recovered from, so dispatch on the JSON value shape instead.
impl<'de> Deserialize<'de> for GraphRef {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        match serde_json::Value::deserialize(deserializer)? {
            serde_json::Value::String(path) => Ok(GraphRef::Path(path)),
            other => serde_json::from_value(other)
                .map(GraphRef::Inline)
                .map_err(serde::de::Error::custom),
        }
    }
}

/// `{"graph": <graph doc or path>, "edge_labels": [bit per canonical edge]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDoc {
    pub graph: GraphRef,
    pub edge_labels: Vec<u8>,
}

impl LabelingDoc {
    pub fn inline(graph: &Graph, labeling: &EdgeLabeling) -> Self {
        LabelingDoc {
            graph: GraphRef::Inline(GraphDoc::from_graph(graph)),
            edge_labels: labeling.bits().to_vec(),
        }
    }

    /// Resolves the graph reference (relative paths against `base_dir`) and
    /// binds the labels to it.
    pub fn resolve(&self, base_dir: &Path) -> Result<(Graph, EdgeLabeling)> {
        let graph = match &self.graph {
            GraphRef::Inline(doc) => doc.to_graph()?,
            GraphRef::Path(p) => {
                let path = Path::new(p);
                let full = if path.is_absolute() {
                    path.to_path_buf()
                } else {
                    base_dir.join(path)
                };
                read_graph(&full)?
            }
        };
        let labeling = EdgeLabeling::new(&graph, self.edge_labels.clone())?;
        Ok((graph, labeling))
    }

    /// Binds the labels to a caller-supplied graph. An inline graph document
    /// must describe the same structure; a path reference is trusted to.
    pub fn bind_to(&self, graph: &Graph) -> Result<EdgeLabeling> {
        if let GraphRef::Inline(doc) = &self.graph {
            if doc.to_graph()?.fingerprint() != graph.fingerprint() {
                return Err(Error::BindingMismatch(
                    "labeling document embeds a different graph".into(),
                ));
            }
        }
        EdgeLabeling::new(graph, self.edge_labels.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("labeling doc serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn read_labeling(path: &Path) -> Result<LabelingDoc> {
    LabelingDoc::from_json(&std::fs::read_to_string(path)?)
}

/// `{"e0":..,"e1":..,"v0":..,"v1":..,"gap":..,"tepc":bool}`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub e0: usize,
    pub e1: usize,
    pub v0: usize,
    pub v1: usize,
    pub gap: i64,
    pub tepc: bool,
}

impl VerdictDoc {
    pub fn from_tally(tally: &Tally) -> Self {
        VerdictDoc {
            e0: tally.e0,
            e1: tally.e1,
            v0: tally.v0,
            v1: tally.v1,
            gap: tally.gap(),
            tepc: tally.is_balanced(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

/// `{"edges":..,"examined":..,"tepc_count":..|null,"witness":[bits]|null,
///   "exhaustive":..,"elapsed_ms":..}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub edges: usize,
    pub examined: u64,
    pub tepc_count: Option<u64>,
    pub witness: Option<Vec<u8>>,
    pub exhaustive: bool,
    pub elapsed_ms: u64,
}

impl ReportDoc {
    pub fn from_report(report: &SearchReport) -> Self {
        ReportDoc {
            edges: report.edge_count,
            examined: report.labelings_examined,
            tepc_count: report.tepc_count,
            witness: report.witness.as_ref().map(|w| w.bits().to_vec()),
            exhaustive: report.exhaustive,
            elapsed_ms: report.elapsed.as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, build_wheel, corona};
    use crate::labelers::label_corona_path_path;

    #[test]
    fn graph_doc_round_trip() {
        let (g, _) = corona(&build_path(2).unwrap(), &build_path(2).unwrap()).unwrap();
        let doc = GraphDoc::from_graph(&g);
        let parsed = GraphDoc::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
        let rebuilt = parsed.to_graph().unwrap();
        assert_eq!(rebuilt, g);
    }

    #[test]
    fn roles_survive_serialization() {
        let g = build_wheel(3).unwrap();
        let doc = GraphDoc::from_graph(&g);
        assert_eq!(doc.roles.get(&0).map(String::as_str), Some("center"));
        let rebuilt = doc.to_graph().unwrap();
        assert_eq!(rebuilt.role(0), Role::Center);
        assert_eq!(rebuilt.role(2), Role::Rim(2));
    }

    #[test]
    fn rejects_non_canonical_edge_order() {
        let out_of_order = r#"{"vertex_count": 3, "edges": [[1,2],[0,1]]}"#;
        assert!(matches!(
            GraphDoc::from_json(out_of_order).unwrap().to_graph(),
            Err(Error::Format(_))
        ));
        let swapped = r#"{"vertex_count": 3, "edges": [[1,0],[1,2]]}"#;
        assert!(matches!(
            GraphDoc::from_json(swapped).unwrap().to_graph(),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn rejects_malformed_json() {
        assert!(GraphDoc::from_json("{").is_err());
        assert!(LabelingDoc::from_json(r#"{"edge_labels": []}"#).is_err());
    }

    #[test]
    fn labeling_doc_inline_round_trip() {
        let (g, _, f, _) = label_corona_path_path(3, 2).unwrap();
        let doc = LabelingDoc::inline(&g, &f);
        let parsed = LabelingDoc::from_json(&doc.to_json()).unwrap();
        let (g2, f2) = parsed.resolve(Path::new(".")).unwrap();
        assert_eq!(g2, g);
        assert_eq!(f2, f);
    }

    #[test]
    fn labeling_doc_path_reference() {
        let dir = tempfile::tempdir().unwrap();
        let g = build_wheel(4).unwrap();
        write_graph(&dir.path().join("wheel.json"), &g).unwrap();

        let doc = LabelingDoc {
            graph: GraphRef::Path("wheel.json".into()),
            edge_labels: vec![1; g.edge_count()],
        };
        let reparsed = LabelingDoc::from_json(&doc.to_json()).unwrap();
        let (g2, f2) = reparsed.resolve(dir.path()).unwrap();
        assert_eq!(g2.fingerprint(), g.fingerprint());
        assert!(f2.binds(&g));
    }

    #[test]
    fn bind_rejects_foreign_inline_graph() {
        let a = build_path(3).unwrap();
        let b = build_path(4).unwrap();
        let doc = LabelingDoc {
            graph: GraphRef::Inline(GraphDoc::from_graph(&a)),
            edge_labels: vec![0, 1],
        };
        assert!(matches!(doc.bind_to(&b), Err(Error::BindingMismatch(_))));
    }

    #[test]
    fn verdict_json_shape() {
        let t = Tally {
            e0: 1,
            e1: 2,
            v0: 2,
            v1: 2,
        };
        let v = VerdictDoc::from_tally(&t);
        assert_eq!(
            v.to_json(),
            r#"{"e0":1,"e1":2,"v0":2,"v1":2,"gap":-1,"tepc":true}"#
        );
    }

    #[test]
    fn report_json_keeps_nulls() {
        let g = build_path(2).unwrap();
        let report = crate::search::certify_not_tepc(&g).unwrap();
        let doc = ReportDoc::from_report(&report);
        let json = doc.to_json();
        assert!(json.contains(r#""witness":null"#));
        assert!(json.contains(r#""tepc_count":0"#));
    }
}
