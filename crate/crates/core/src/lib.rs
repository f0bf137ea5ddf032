//! Chopped lattices of the 1960 construction and sectional complements in
//! their ideal lattices.
//!
//! Given a finite order `P`, [`ChoppedLattice::build`] glues one six-element
//! block `N(x,y)` per cover `x ≻ y`. Ideals of the result are compatible
//! [`Vector`]s. [`run_algorithm`] computes a sectional complement of `u` in
//! `v` by cutting the blockwise maximal complement, and [`s1960`] evaluates
//! the closed-form 1960 complement; an exhaustive oracle checks both
//! against brute force.

pub mod algorithm;
pub mod chopped;
pub mod cli;
pub mod congruence;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod formula;
pub mod iso;
pub mod lattice;
pub mod oracle;
pub mod poset;
pub mod strategy;
pub mod vector;

pub use algorithm::{run_algorithm, AlgorithmRun, Failure, RunOptions};
pub use chopped::{ChoppedLattice, ElementId, GlobalElement, Role, Suborder, SuborderKind};
pub use error::{Error, Result};
pub use formula::{s1960, split_set, SplitReport};
pub use lattice::{downset_lattice, FiniteLattice};
pub use poset::{CoveringPair, Poset};
pub use strategy::{Lcg, Strategy};
pub use vector::{AtomSet, Ideal, Vector};
