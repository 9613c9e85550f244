use std::fmt::Write;

use crate::exactfield::Field;

use super::SubalgebraLattice;

/// Hasse diagram in DOT. Nodes appear in lattice order (dimension, then
/// echelon basis); maximal subalgebras are filled and the Frattini ideal
/// has a double red border.
pub fn to_dot<F: Field>(lat: &SubalgebraLattice<F>) -> String {
    let alg = lat.algebra();
    let maximal = lat.maximal_nodes();
    let phi = lat.frattini_ideal();
    let phi_index = lat.index_of(&phi);
    let mut out = String::new();
    out.push_str("digraph subalgebras {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, s) in lat.nodes().iter().enumerate() {
        let label = format!("dim {}\\n{}", s.dim(), alg.describe(s));
        let mut attrs = vec![format!("label=\"{label}\"")];
        if maximal.contains(&i) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightblue".into());
        }
        if Some(i) == phi_index {
            attrs.push("peripheries=2".into());
            attrs.push("color=red".into());
        }
        writeln!(out, "  n{i} [{}];", attrs.join(", ")).unwrap();
    }
    for b in 0..lat.len() {
        for &a in lat.lower_covers(b) {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
