//! Graphviz export. Vertices carry their role tag as the node label; with a
//! labeling, edges carry their bit and vertices are filled by induced label.

use std::fmt::Write;

use crate::error::Result;
use crate::graph::{Graph, Role};
use crate::labeling::{induced_vertex_labels, EdgeLabeling};

const FILL_ZERO: &str = "lightcoral";
const FILL_ONE: &str = "lightblue";

/// Renders an undirected DOT document.
pub fn to_dot(graph: &Graph, labeling: Option<&EdgeLabeling>) -> Result<String> {
    let vertex_bits = labeling
        .map(|f| induced_vertex_labels(graph, f))
        .transpose()?;

    let mut out = String::new();
    out.push_str("graph tepc {\n");
    out.push_str("  node [shape=circle fontsize=10];\n");
    for v in graph.vertices() {
        let name = match graph.role(v) {
            Role::Plain => format!("v{v}"),
            role => role.to_string(),
        };
        match &vertex_bits {
            Some(bits) => {
                let fill = if bits.bit(v) == 0 { FILL_ZERO } else { FILL_ONE };
                writeln!(out, "  v{v} [label=\"{name}\" style=filled fillcolor={fill}];").unwrap();
            }
            None => writeln!(out, "  v{v} [label=\"{name}\"];").unwrap(),
        }
    }
    for (idx, &(a, b)) in graph.edges().iter().enumerate() {
        match labeling {
            Some(f) => writeln!(out, "  v{a} -- v{b} [label=\"{}\"];", f.bit(idx)).unwrap(),
            None => writeln!(out, "  v{a} -- v{b};").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}
