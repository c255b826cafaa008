//! Graphviz export.

use std::fmt::Write;

use super::admissible::{AdmissibleGraph, Target};

/// Aerial vertices as circles, ground vertices as boxes on the bottom rank; the
/// first edge of each pair is solid and the second dashed.
pub fn to_dot(g: &AdmissibleGraph, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {name} {{").unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for k in 0..g.n() {
        writeln!(s, "  a{} [label=\"{}\"];", k + 1, k + 1).unwrap();
    }
    writeln!(s, "  X [shape=box]; Y [shape=box];").unwrap();
    writeln!(s, "  {{ rank=sink; X; Y; }}").unwrap();
    for (k, e) in g.edges().iter().enumerate() {
        for (slot, t) in e.iter().enumerate() {
            let to = match t {
                Target::Aerial(v) => format!("a{}", v + 1),
                other => other.to_string(),
            };
            let style = if slot == 0 { "solid" } else { "dashed" };
            writeln!(s, "  a{} -> {to} [style={style}];", k + 1).unwrap();
        }
    }
    s.push_str("}\n");
    s
}
