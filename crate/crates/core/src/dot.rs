use std::fmt::Write;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Graphviz source for `g`. Vertices in `highlight` are filled.
pub fn to_dot(g: &Graph, highlight: Option<&VertexSet>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let label = g.label(v).replace('"', "\\\"");
        let style = match highlight {
            Some(s) if s.contains(v) => ", style=filled, fillcolor=lightblue",
            _ => "",
        };
        writeln!(out, "  {v} [label=\"{label}\"{style}];").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}
