//! The chopped lattice `M` of the 1960 construction.
//!
//! Every covering pair `x ≻ y` of `P` contributes a six-element block
//! `N(x,y)` with atoms `x1`, `y1`, `y2`, the element `y = y1 ∨ y2` and the
//! top `x(y)`. Blocks are glued along shared elements:
//!
//! * `x1` is the same element in every block `(x,·)` and `(·,x)`;
//! * `y2` and `y` are shared by all blocks `(·,y)`;
//! * each top belongs to exactly one block.
//!
//! The result is a meet-semilattice. Joins are only defined inside a block
//! and are not exposed here; see [`crate::vector`] for the ideal lattice.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{CoveringPair, Poset};

/// Position of an element inside a block `N(x,y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Role {
    Zero,
    /// `x1`
    UpperAtom,
    /// `y1`
    LowerAtom1,
    /// `y2`
    LowerAtom2,
    /// `y = y1 ∨ y2`
    LowerSum,
    /// `x(y)`
    Top,
}

impl Role {
    pub const ALL: [Role; 6] = [
        Role::Zero,
        Role::UpperAtom,
        Role::LowerAtom1,
        Role::LowerAtom2,
        Role::LowerSum,
        Role::Top,
    ];

    /// Order of the block `N(x,y)`.
    pub fn leq(self, other: Role) -> bool {
        use Role::*;
        match (self, other) {
            (a, b) if a == b => true,
            (Zero, _) | (_, Top) => true,
            (LowerAtom1 | LowerAtom2, LowerSum) => true,
            _ => false,
        }
    }

    pub fn meet(self, other: Role) -> Role {
        // Six elements; the greatest common lower bound by inspection.
        Role::ALL
            .into_iter()
            .rev()
            .find(|&r| r.leq(self) && r.leq(other) && Role::ALL.iter().all(|&s| !(s.leq(self) && s.leq(other)) || s.leq(r)))
            .expect("block is a lattice")
    }

    pub fn join(self, other: Role) -> Role {
        Role::ALL
            .into_iter()
            .find(|&r| self.leq(r) && other.leq(r) && Role::ALL.iter().all(|&s| !(self.leq(s) && other.leq(s)) || r.leq(s)))
            .expect("block is a lattice")
    }

    /// `self ≻ lower` inside the block.
    pub fn covers(self, lower: Role) -> bool {
        self != lower
            && lower.leq(self)
            && !Role::ALL
                .iter()
                .any(|&z| z != self && z != lower && lower.leq(z) && z.leq(self))
    }

    pub fn is_atom(self) -> bool {
        matches!(self, Role::UpperAtom | Role::LowerAtom1 | Role::LowerAtom2)
    }

    /// The other lower atom; identity on the remaining roles.
    pub fn twin(self) -> Role {
        match self {
            Role::LowerAtom1 => Role::LowerAtom2,
            Role::LowerAtom2 => Role::LowerAtom1,
            r => r,
        }
    }
}

/// Canonical identity of an element of `M`, keyed by symbols of `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlobalElement {
    Zero,
    /// `x1`, shared by every block that mentions `x`.
    A1(usize),
    /// `y2`, shared by every block `(·,y)`.
    A2(usize),
    /// `y = y1 ∨ y2`, shared by every block `(·,y)`.
    Sum(usize),
    /// Top `x(y)` of the block `(x,y)`.
    Top(usize, usize),
}

/// Index of an element of `M` in [`ChoppedLattice::elements`].
pub type ElementId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuborderKind {
    V,
    C,
    H,
}

impl fmt::Display for SuborderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuborderKind::V => "V",
            SuborderKind::C => "C",
            SuborderKind::H => "H",
        })
    }
}

/// A cover-preserving triple of `P`.
///
/// * `V`: `p ≻ r`, `q ≻ r`, `p < q` by name;
/// * `C`: `p ≻ q ≻ r`;
/// * `H`: `p ≻ q`, `p ≻ r`, `q < r` by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Suborder {
    pub kind: SuborderKind,
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl Suborder {
    /// The two covering pairs whose blocks overlap at this suborder.
    pub fn pairs(&self, poset: &Poset) -> (usize, usize) {
        let idx = |u, l| poset.pair_index(u, l).expect("suborder uses covers");
        match self.kind {
            SuborderKind::V => (idx(self.p, self.r), idx(self.q, self.r)),
            SuborderKind::C => (idx(self.p, self.q), idx(self.q, self.r)),
            SuborderKind::H => (idx(self.p, self.q), idx(self.p, self.r)),
        }
    }

    pub fn names(&self, poset: &Poset) -> [String; 3] {
        [self.p, self.q, self.r].map(|x| poset.name(x).to_owned())
    }
}

/// All suborders of one kind, in canonical `(p, q, r)` order.
pub fn enumerate_suborders(poset: &Poset, kind: SuborderKind) -> Vec<Suborder> {
    let n = poset.len();
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let ok = match kind {
                    SuborderKind::V => p < q && poset.covers(p, r) && poset.covers(q, r),
                    SuborderKind::C => poset.covers(p, q) && poset.covers(q, r),
                    SuborderKind::H => q < r && poset.covers(p, q) && poset.covers(p, r),
                };
                if ok {
                    out.push(Suborder { kind, p, q, r });
                }
            }
        }
    }
    out
}

/// The glued union of the blocks `N(x,y)` over all covers of `P`.
#[derive(Debug, Clone)]
pub struct ChoppedLattice {
    poset: Poset,
    elements: Vec<GlobalElement>,
    index: HashMap<GlobalElement, ElementId>,
    // blocks[pair][role as usize]
    blocks: Vec<[ElementId; 6]>,
    leq: Vec<bool>,
    meet: Vec<ElementId>,
    atoms: Vec<ElementId>,
    suborders: Vec<Suborder>,
    // (pair, pair, overlap top) per suborder
    links: Vec<(usize, usize, ElementId)>,
}

fn role_slot(role: Role) -> usize {
    Role::ALL.iter().position(|&r| r == role).expect("role listed")
}

impl ChoppedLattice {
    /// Builds `M` from `P`. Every element of `P` must lie in some cover.
    pub fn build(poset: &Poset) -> Result<Self> {
        let pairs = poset.covering_pairs();
        if let Some(x) = (0..poset.len())
            .find(|&x| !pairs.iter().any(|c| c.upper == x || c.lower == x))
        {
            return Err(Error::IsolatedElement(poset.name(x).to_owned()));
        }

        let embed = |c: CoveringPair, role: Role| match role {
            Role::Zero => GlobalElement::Zero,
            Role::UpperAtom => GlobalElement::A1(c.upper),
            Role::LowerAtom1 => GlobalElement::A1(c.lower),
            Role::LowerAtom2 => GlobalElement::A2(c.lower),
            Role::LowerSum => GlobalElement::Sum(c.lower),
            Role::Top => GlobalElement::Top(c.upper, c.lower),
        };
        let mut elements: Vec<GlobalElement> = pairs
            .iter()
            .flat_map(|&c| Role::ALL.map(|r| embed(c, r)))
            .collect();
        elements.sort();
        elements.dedup();
        let index: HashMap<GlobalElement, ElementId> =
            elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let blocks: Vec<[ElementId; 6]> =
            pairs.iter().map(|&c| Role::ALL.map(|r| index[&embed(c, r)])).collect();

        let n = elements.len();
        let mut leq = vec![false; n * n];
        for block in &blocks {
            for a in Role::ALL {
                for b in Role::ALL {
                    if a.leq(b) {
                        leq[block[role_slot(a)] * n + block[role_slot(b)]] = true;
                    }
                }
            }
        }

        let down: Vec<usize> = (0..n).map(|a| (0..n).filter(|&x| leq[x * n + a]).count()).collect();
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let m = (0..n)
                    .filter(|&x| leq[x * n + a] && leq[x * n + b])
                    .max_by_key(|&x| down[x])
                    .expect("zero is below everything");
                meet[a * n + b] = m;
            }
        }
        let zero = index[&GlobalElement::Zero];
        let atoms: Vec<ElementId> = (0..n)
            .filter(|&a| a != zero && (0..n).all(|x| x == a || x == zero || !leq[x * n + a]))
            .collect();

        let suborders = [SuborderKind::V, SuborderKind::C, SuborderKind::H]
            .into_iter()
            .flat_map(|k| enumerate_suborders(poset, k))
            .collect();

        let mut lattice = ChoppedLattice {
            poset: poset.clone(),
            elements,
            index,
            blocks,
            leq,
            meet,
            atoms,
            suborders,
            links: Vec::new(),
        };
        lattice.links = lattice
            .suborders
            .iter()
            .map(|s| {
                let (a, b) = s.pairs(poset);
                (a, b, lattice.overlap_top(s))
            })
            .collect();
        Ok(lattice)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Number of blocks, i.e. covering pairs of `P`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GlobalElement] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> GlobalElement {
        self.elements[id]
    }

    pub fn id_of(&self, e: GlobalElement) -> Option<ElementId> {
        self.index.get(&e).copied()
    }

    pub fn zero(&self) -> ElementId {
        self.index[&GlobalElement::Zero]
    }

    /// The element of `M` that plays `role` in the block of `pair`.
    pub fn embed(&self, pair: usize, role: Role) -> ElementId {
        self.blocks[pair][role_slot(role)]
    }

    /// The role of `element` in the block of `pair`, if it belongs to it.
    pub fn role_in(&self, pair: usize, element: ElementId) -> Option<Role> {
        Role::ALL.into_iter().find(|&r| self.embed(pair, r) == element)
    }

    pub fn block(&self, pair: usize) -> &[ElementId; 6] {
        &self.blocks[pair]
    }

    /// Blocks containing `element`.
    pub fn blocks_containing(&self, element: ElementId) -> impl Iterator<Item = usize> + '_ {
        (0..self.blocks.len()).filter(move |&b| self.blocks[b].contains(&element))
    }

    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet[a * self.len() + b]
    }

    pub fn global_atoms(&self) -> &[ElementId] {
        &self.atoms
    }

    pub fn maximal_elements(&self) -> Vec<ElementId> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(a, b)))
            .collect()
    }

    /// Elements lying in both blocks.
    pub fn shared(&self, pair_a: usize, pair_b: usize) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = self.blocks[pair_a]
            .iter()
            .copied()
            .filter(|e| self.blocks[pair_b].contains(e))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn suborders(&self) -> &[Suborder] {
        &self.suborders
    }

    /// For each suborder, its two block indices and [`Self::overlap_top`].
    pub fn links(&self) -> &[(usize, usize, ElementId)] {
        &self.links
    }

    /// Number of suborders of each kind.
    pub fn census(&self) -> (usize, usize, usize) {
        let count = |k| self.suborders.iter().filter(|s| s.kind == k).count();
        (count(SuborderKind::V), count(SuborderKind::C), count(SuborderKind::H))
    }

    /// The element shared by the two blocks at `s` that bounds their overlap:
    /// `SUM(r)` for `V`, `A1(q)` for `C`, `A1(p)` for `H`.
    pub fn overlap_top(&self, s: &Suborder) -> ElementId {
        let e = match s.kind {
            SuborderKind::V => GlobalElement::Sum(s.r),
            SuborderKind::C => GlobalElement::A1(s.q),
            SuborderKind::H => GlobalElement::A1(s.p),
        };
        self.index[&e]
    }

    /// Display name of an element of `M`: `0`, `x1`, `y2`, `y`, `x(y)`.
    pub fn element_name(&self, id: ElementId) -> String {
        let p = &self.poset;
        match self.elements[id] {
            GlobalElement::Zero => "0".into(),
            GlobalElement::A1(x) => format!("{}1", p.name(x)),
            GlobalElement::A2(y) => format!("{}2", p.name(y)),
            GlobalElement::Sum(y) => p.name(y).to_owned(),
            GlobalElement::Top(x, y) => format!("{}({})", p.name(x), p.name(y)),
        }
    }

    /// Name of `role` inside the block of `pair`.
    pub fn role_name(&self, pair: usize, role: Role) -> String {
        self.element_name(self.embed(pair, role))
    }

    /// Reads an element token in the context of a block.
    pub fn parse_role(&self, pair: usize, token: &str) -> Result<Role> {
        let matches: Vec<Role> = Role::ALL
            .into_iter()
            .filter(|&r| self.role_name(pair, r) == token)
            .collect();
        let c = self.poset.covering_pairs()[pair];
        match matches.as_slice() {
            [r] => Ok(*r),
            [] => Err(Error::Parse(format!(
                "{token:?} is not an element of block {}",
                self.poset.pair_name(c)
            ))),
            _ => Err(Error::Parse(format!(
                "{token:?} is ambiguous in block {}",
                self.poset.pair_name(c)
            ))),
        }
    }
}
