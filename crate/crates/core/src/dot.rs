//! Graphviz output for the Hasse diagram of `M`.
//!
//! Elements shared between blocks are drawn once, so the blocks appear
//! glued along their common ideals.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::algorithm::AlgorithmRun;
use crate::chopped::{ChoppedLattice, ElementId, Role};

/// Elements to color: what each cut removed and what it left behind.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Highlight {
    pub removed: BTreeSet<ElementId>,
    pub kept: BTreeSet<ElementId>,
}

impl Highlight {
    pub fn from_run(m: &ChoppedLattice, run: &AlgorithmRun) -> Self {
        let mut h = Highlight::default();
        for rec in &run.trace {
            let f = &rec.failure;
            h.removed.insert(m.embed(f.coordinate, f.from));
            h.kept.insert(m.embed(f.coordinate, f.to));
        }
        h.kept.retain(|e| !h.removed.contains(e));
        h
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The covering edges of `M` as `(lower, upper)`, without repeats.
pub fn hasse_edges(m: &ChoppedLattice) -> BTreeSet<(ElementId, ElementId)> {
    let mut edges = BTreeSet::new();
    for pair in 0..m.block_count() {
        for hi in Role::ALL {
            for lo in Role::ALL.into_iter().filter(|&lo| hi.covers(lo)) {
                edges.insert((m.embed(pair, lo), m.embed(pair, hi)));
            }
        }
    }
    edges
}

pub fn to_dot(m: &ChoppedLattice, highlight: Option<&Highlight>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph M {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    writeln!(out, "  edge [arrowhead=none];").unwrap();
    for id in 0..m.len() {
        let name = m.element_name(id);
        let mut attrs = vec![format!("label={}", quote(&name))];
        if m.blocks_containing(id).nth(1).is_some() {
            attrs.push("peripheries=2".into());
        }
        if let Some(h) = highlight {
            if h.removed.contains(&id) {
                attrs.push("style=filled, fillcolor=\"#f4a6a6\"".into());
            } else if h.kept.contains(&id) {
                attrs.push("style=filled, fillcolor=\"#a6d8f4\"".into());
            }
        }
        writeln!(out, "  n{id} [{}];", attrs.join(", ")).unwrap();
    }
    for (lo, hi) in hasse_edges(m) {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn v_order_diagram() {
        let m = ChoppedLattice::build(&corpus::v_order()).unwrap();
        // Two blocks of 7 covers each, sharing 0 ≺ r1, 0 ≺ r2, r1 ≺ r, r2 ≺ r.
        assert_eq!(hasse_edges(&m).len(), 10);
        let dot = to_dot(&m, None);
        assert_eq!(dot.matches("label=").count(), m.len());
        assert_eq!(dot.matches("peripheries=2").count(), 4);
        assert!(dot.contains("label=\"p(r)\""));
    }
}
