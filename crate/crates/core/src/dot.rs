//! Graphviz DOT emission.

use std::fmt::Write;

use crate::order::PartialOrder;
use crate::tilting::TiltPoset;

/// Tilting poset: node `tK` is the `K`-th element, labeled by its summands;
/// an edge `s -> t` is a left mutation labeled by the replaced summand.
pub fn tilt_poset_dot(poset: &TiltPoset) -> String {
    let mut out = String::from("digraph tilt {\n  node [shape=box];\n");
    for (i, t) in poset.elements.iter().enumerate() {
        writeln!(out, "  t{i} [label=\"{t}\"];").unwrap();
    }
    for e in &poset.edges {
        writeln!(
            out,
            "  t{} -> t{} [label=\"{}\"];",
            e.source, e.target, e.summand
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram with arrows from the greater to the lesser vertex of each cover.
pub fn order_dot(order: &PartialOrder) -> String {
    let mut out = String::from("digraph order {\n");
    for v in order.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for (g, l) in order.covers() {
        writeln!(out, "  {g} -> {l};").unwrap();
    }
    out.push_str("}\n");
    out
}
