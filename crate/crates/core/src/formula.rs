//! The closed-form 1960 sectional complement.
//!
//! `q` splits over `(u, v)` when some `p ≻ q` has `p1` and `q_i` in
//! `At(v) − At(u)` while `q_{i+1}` (index mod 2) lies in `At(u)`. The 1960
//! complement is the join in `Id M` of `(At(v) − At(u)) − Split(u, v)`.

use serde::Serialize;

use crate::chopped::{ChoppedLattice, GlobalElement};
use crate::vector::{atoms_below, vector_join_all, AtomSet, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    /// The cover `p ≻ q`.
    pub upper: String,
    /// `i` with `q_i ∈ At(v) − At(u)` and `q_{i+1} ∈ At(u)`.
    pub index: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitEntry {
    pub element: String,
    pub splits: bool,
    pub witnesses: Vec<SplitWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub entries: Vec<SplitEntry>,
    /// Names of the atoms in `Split(u, v)`.
    pub split: Vec<String>,
    #[serde(skip)]
    pub atoms: AtomSet,
}

impl SplitReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("split report serializes")
    }
}

/// `At(v) − At(u)`.
pub fn atom_difference(m: &ChoppedLattice, u: &Vector, v: &Vector) -> AtomSet {
    let below_u = atoms_below(m, u);
    atoms_below(m, v).difference(&below_u).copied().collect()
}

pub fn split_set(m: &ChoppedLattice, u: &Vector, v: &Vector) -> SplitReport {
    let poset = m.poset();
    let at_u = atoms_below(m, u);
    let fresh = atom_difference(m, u, v);
    let atom = |e: GlobalElement| m.id_of(e);
    let mut entries = Vec::new();
    let mut split = AtomSet::new();
    for q in 0..poset.len() {
        let q_atoms = [atom(GlobalElement::A1(q)), atom(GlobalElement::A2(q))];
        let mut witnesses = Vec::new();
        for p in poset.upper_covers(q) {
            let Some(p1) = atom(GlobalElement::A1(p)) else { continue };
            if !fresh.contains(&p1) {
                continue;
            }
            for i in 0..2 {
                let (Some(this), Some(other)) = (q_atoms[i], q_atoms[1 - i]) else { continue };
                if fresh.contains(&this) && at_u.contains(&other) {
                    witnesses.push(SplitWitness { upper: poset.name(p).to_owned(), index: i as u8 + 1 });
                    split.insert(this);
                }
            }
        }
        entries.push(SplitEntry {
            element: poset.name(q).to_owned(),
            splits: !witnesses.is_empty(),
            witnesses,
        });
    }
    SplitReport {
        entries,
        split: split.iter().map(|&a| m.element_name(a)).collect(),
        atoms: split,
    }
}

/// The 1960 sectional complement of `u` in `v`.
pub fn s1960(m: &ChoppedLattice, u: &Vector, v: &Vector) -> Vector {
    let report = split_set(m, u, v);
    let atoms: Vec<Vector> = atom_difference(m, u, v)
        .difference(&report.atoms)
        .map(|&a| Vector::of_atom(m, a))
        .collect();
    vector_join_all(m, &atoms)
}
