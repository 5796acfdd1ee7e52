//! Graphviz export of a Hasse diagram with a matching drawn on it.

use std::collections::HashMap;
use std::fmt::Write;

use crate::complex::HasseDiagram;
use crate::face::Face;
use crate::morse::{MatchedPair, MorseMatching};
use crate::order::Ground;

/// Unmatched arcs point from the larger face to the smaller one; matched arcs
/// are reversed and drawn bold.
pub fn hasse_dot(ground: &Ground, hasse: &HasseDiagram, matching: &MorseMatching) -> String {
    let index: HashMap<Face, usize> = hasse
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let mut out = String::from("digraph hasse {\n  node [shape=box];\n");
    for (i, &face) in hasse.nodes().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", ground.display_face(face)).unwrap();
    }
    for &(upper, lower) in hasse.arcs() {
        let (u, d) = (index[&upper], index[&lower]);
        if matching.contains(MatchedPair::new(upper, lower)) {
            writeln!(out, "  n{d} -> n{u} [penwidth=3, color=red];").unwrap();
        } else {
            writeln!(out, "  n{u} -> n{d};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
