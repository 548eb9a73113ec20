//! Graphviz output for eyeballing maps. Write-only: DOT does not carry the
//! rotation system reliably, so each vertex's clockwise neighbour order is
//! included as a comment instead.

use std::fmt::Write as _;

use crate::map::{Colour, Colouring, EmbeddedMap};

pub fn write_dot(map: &EmbeddedMap, colouring: Option<&Colouring>) -> String {
    let mut out = String::from("graph {\n  node [style=filled];\n");
    for v in map.vertices() {
        let order: Vec<String> = map
            .rotation(v)
            .map(|d| format!("v{}", map.vertex_of(map.alpha(d))))
            .collect();
        let _ = writeln!(out, "  // rotation v{v}: {}", order.join(" "));
        let fill = match colouring.map(|chi| chi.colour(v)) {
            Some(Colour::Stable) => "red",
            Some(Colour::Unstable) => "blue",
            None => "lightgray",
        };
        let _ = writeln!(out, "  v{v} [fillcolor={fill}];");
    }
    for e in 0..map.edge_count() {
        let _ = writeln!(
            out,
            "  v{} -- v{};",
            map.vertex_of(2 * e),
            map.vertex_of(2 * e + 1)
        );
    }
    out.push_str("}\n");
    out
}
