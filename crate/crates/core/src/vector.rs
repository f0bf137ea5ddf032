//! Vectors over the blocks of `M` and the ideal lattice `Id M`.
//!
//! A vector assigns every covering pair an element of its block. Compatible
//! vectors (agreeing on every shared element) are exactly the ideals of `M`.

use std::collections::BTreeSet;

use crate::chopped::{ChoppedLattice, ElementId, Role, SuborderKind};
use crate::error::{Error, Result};

/// One block element per covering pair, indexed like
/// [`crate::poset::Poset::covering_pairs`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(pub Vec<Role>);

/// A set of elements of `M`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal(pub BTreeSet<ElementId>);

/// A set of atoms of `M`.
pub type AtomSet = BTreeSet<ElementId>;

impl Vector {
    pub fn zero(m: &ChoppedLattice) -> Self {
        Vector(vec![Role::Zero; m.block_count()])
    }

    pub fn tops(m: &ChoppedLattice) -> Self {
        Vector(vec![Role::Top; m.block_count()])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, pair: usize) -> Role {
        self.0[pair]
    }

    /// Copy with one coordinate replaced.
    pub fn with(&self, pair: usize, role: Role) -> Self {
        let mut v = self.clone();
        v.0[pair] = role;
        v
    }

    /// The ideal `{0, atom}` as a vector.
    pub fn of_atom(m: &ChoppedLattice, atom: ElementId) -> Self {
        Vector(
            (0..m.block_count())
                .map(|b| m.role_in(b, atom).unwrap_or(Role::Zero))
                .collect(),
        )
    }

    /// Parses `upper>lower=element,...`; every cover must appear exactly once.
    pub fn parse(m: &ChoppedLattice, text: &str) -> Result<Self> {
        let poset = m.poset();
        let mut slots: Vec<Option<Role>> = vec![None; m.block_count()];
        for entry in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, token) = entry
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("entry {entry:?} lacks '='")))?;
            let (upper, lower) = key
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("entry {entry:?} lacks '>'")))?;
            let pair = poset
                .index_of(upper)
                .zip(poset.index_of(lower))
                .and_then(|(u, l)| poset.pair_index(u, l))
                .ok_or_else(|| Error::Parse(format!("{key} is not a cover")))?;
            if slots[pair].is_some() {
                return Err(Error::Parse(format!("{key} given twice")));
            }
            slots[pair] = Some(m.parse_role(pair, token)?);
        }
        let found = slots.iter().filter(|s| s.is_some()).count();
        if found != slots.len() {
            return Err(Error::KeyMismatch { expected: slots.len(), found });
        }
        Ok(Vector(slots.into_iter().map(|s| s.expect("all present")).collect()))
    }

    /// Formats as the literal accepted by [`Vector::parse`].
    pub fn format(&self, m: &ChoppedLattice) -> String {
        let poset = m.poset();
        self.0
            .iter()
            .enumerate()
            .map(|(pair, &r)| {
                format!("{}={}", poset.pair_name(poset.covering_pairs()[pair]), m.role_name(pair, r))
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn check_keys(m: &ChoppedLattice, c: &Vector) -> Result<()> {
    if c.len() != m.block_count() {
        return Err(Error::KeyMismatch { expected: m.block_count(), found: c.len() });
    }
    Ok(())
}

/// Agreement test at one suborder: both coordinates met with the shared
/// element bounding the overlap, meets taken in `M`.
pub fn compatible_at(m: &ChoppedLattice, c: &Vector, s: &crate::chopped::Suborder) -> bool {
    let (a, b) = s.pairs(m.poset());
    let t = m.overlap_top(s);
    m.meet(m.embed(a, c.get(a)), t) == m.meet(m.embed(b, c.get(b)), t)
}

/// V, C and H compatibility at every suborder.
pub fn is_compatible(m: &ChoppedLattice, c: &Vector) -> Result<bool> {
    check_keys(m, c)?;
    Ok(m.suborders().iter().all(|s| compatible_at(m, c, s)))
}

/// Compatibility restricted to one kind of suborder.
pub fn is_compatible_kind(m: &ChoppedLattice, c: &Vector, kind: SuborderKind) -> bool {
    m.suborders().iter().filter(|s| s.kind == kind).all(|s| compatible_at(m, c, s))
}

fn require_compatible(m: &ChoppedLattice, c: &Vector) -> Result<()> {
    if is_compatible(m, c)? {
        Ok(())
    } else {
        Err(Error::IncompatibleVector)
    }
}

/// The union of the principal block down-sets of the entries.
pub fn ideal_from_vector(m: &ChoppedLattice, c: &Vector) -> Result<Ideal> {
    require_compatible(m, c)?;
    let mut set = BTreeSet::new();
    for (pair, &top) in c.0.iter().enumerate() {
        for r in Role::ALL {
            if r.leq(top) {
                set.insert(m.embed(pair, r));
            }
        }
    }
    Ok(Ideal(set))
}

/// Per block, the largest element of the ideal.
pub fn vector_from_ideal(m: &ChoppedLattice, ideal: &Ideal) -> Result<Vector> {
    let set = &ideal.0;
    if !set.contains(&m.zero()) {
        return Err(Error::NotAnIdeal("missing 0".into()));
    }
    if let Some(&x) = set.iter().find(|&&x| x >= m.len()) {
        return Err(Error::NotAnIdeal(format!("unknown element id {x}")));
    }
    for &x in set {
        if let Some(y) = (0..m.len()).find(|&y| m.leq(y, x) && !set.contains(&y)) {
            return Err(Error::NotAnIdeal(format!(
                "{} lies below {} but is missing",
                m.element_name(y),
                m.element_name(x)
            )));
        }
    }
    let mut entries = Vec::with_capacity(m.block_count());
    for pair in 0..m.block_count() {
        let inside: Vec<Role> =
            Role::ALL.into_iter().filter(|&r| set.contains(&m.embed(pair, r))).collect();
        let join = inside.iter().fold(Role::Zero, |acc, &r| acc.join(r));
        if !inside.contains(&join) {
            return Err(Error::NotAnIdeal(format!(
                "not closed under the join {} in block {}",
                m.role_name(pair, join),
                m.poset().pair_name(m.poset().covering_pairs()[pair])
            )));
        }
        entries.push(join);
    }
    Ok(Vector(entries))
}

/// Componentwise order.
pub fn vector_leq(c: &Vector, d: &Vector) -> bool {
    c.0.len() == d.0.len() && c.0.iter().zip(&d.0).all(|(a, b)| a.leq(*b))
}

/// Componentwise meet of two compatible vectors.
pub fn vector_meet(m: &ChoppedLattice, c: &Vector, d: &Vector) -> Result<Vector> {
    require_compatible(m, c)?;
    require_compatible(m, d)?;
    Ok(meet_unchecked(c, d))
}

pub(crate) fn meet_unchecked(c: &Vector, d: &Vector) -> Vector {
    Vector(c.0.iter().zip(&d.0).map(|(a, b)| a.meet(*b)).collect())
}

/// Join in `Id M`: the vector of the ideal generated by both.
pub fn vector_join(m: &ChoppedLattice, c: &Vector, d: &Vector) -> Result<Vector> {
    require_compatible(m, c)?;
    require_compatible(m, d)?;
    Ok(join_unchecked(m, c, d))
}

/// Componentwise join, then propagation across shared elements until every
/// block contains what its neighbours force into it.
pub(crate) fn join_unchecked(m: &ChoppedLattice, c: &Vector, d: &Vector) -> Vector {
    let mut out: Vec<Role> = c.0.iter().zip(&d.0).map(|(a, b)| a.join(*b)).collect();
    close_upward(m, &mut out);
    Vector(out)
}

pub(crate) fn close_upward(m: &ChoppedLattice, entries: &mut [Role]) {
    loop {
        let mut changed = false;
        for &(a, b, t) in m.links() {
            for (from, to) in [(a, b), (b, a)] {
                let forced = m.meet(m.embed(from, entries[from]), t);
                let role = m.role_in(to, forced).expect("overlap lies in both blocks");
                let next = entries[to].join(role);
                if next != entries[to] {
                    entries[to] = next;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// Join of a set of compatible vectors; the empty join is the zero vector.
pub fn vector_join_all<'a>(m: &ChoppedLattice, items: impl IntoIterator<Item = &'a Vector>) -> Vector {
    items
        .into_iter()
        .fold(Vector::zero(m), |acc, v| join_unchecked(m, &acc, v))
}

/// Atoms of `M` contained in the ideal `c`.
pub fn atoms_below(m: &ChoppedLattice, c: &Vector) -> AtomSet {
    m.global_atoms()
        .iter()
        .copied()
        .filter(|&a| m.blocks_containing(a).any(|pair| m.leq(a, m.embed(pair, c.get(pair)))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn build(elements: &[&str], covers: &[(&str, &str)]) -> ChoppedLattice {
        ChoppedLattice::build(&Poset::new(elements, covers).unwrap()).unwrap()
    }

    fn chain3() -> ChoppedLattice {
        build(&["p", "q", "r"], &[("p", "q"), ("q", "r")])
    }

    fn v_order() -> ChoppedLattice {
        build(&["p", "q", "r"], &[("p", "r"), ("q", "r")])
    }

    fn vec(m: &ChoppedLattice, s: &str) -> Vector {
        Vector::parse(m, s).unwrap()
    }

    fn atom_names(m: &ChoppedLattice, set: &AtomSet) -> Vec<String> {
        set.iter().map(|&a| m.element_name(a)).collect()
    }

    #[test]
    fn compatibility_in_chain() {
        let m = chain3();
        assert!(is_compatible(&m, &vec(&m, "p>q=q2,q>r=0")).unwrap());
        assert!(!is_compatible(&m, &vec(&m, "p>q=p(q),q>r=0")).unwrap());
        assert!(is_compatible(&m, &Vector::zero(&m)).unwrap());
        assert_eq!(
            is_compatible(&m, &Vector(vec![Role::Zero])),
            Err(Error::KeyMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn hat_condition_is_checked() {
        let m = build(&["p", "q", "r"], &[("p", "q"), ("p", "r")]);
        assert!(!is_compatible(&m, &vec(&m, "p>q=p1,p>r=0")).unwrap());
        assert!(is_compatible(&m, &vec(&m, "p>q=p1,p>r=p(r)")).unwrap());
    }

    #[test]
    fn ideal_round_trips() {
        let m = build(&["p", "q"], &[("p", "q")]);
        let ideal = ideal_from_vector(&m, &vec(&m, "p>q=q")).unwrap();
        let names: BTreeSet<String> = ideal.0.iter().map(|&e| m.element_name(e)).collect();
        assert_eq!(names, ["0", "q", "q1", "q2"].map(String::from).into());

        let m = chain3();
        let ideal = ideal_from_vector(&m, &vec(&m, "p>q=p1,q>r=0")).unwrap();
        assert_eq!(ideal.0.len(), 2);
        let all = ideal_from_vector(&m, &Vector::tops(&m)).unwrap();
        assert_eq!(all.0.len(), m.len());
        assert_eq!(vector_from_ideal(&m, &all).unwrap(), Vector::tops(&m));
        assert_eq!(
            vector_from_ideal(&m, &Ideal([m.zero()].into())).unwrap(),
            Vector::zero(&m)
        );
        assert_eq!(
            ideal_from_vector(&m, &vec(&m, "p>q=p(q),q>r=0")),
            Err(Error::IncompatibleVector)
        );
    }

    #[test]
    fn block_maxima() {
        let m = chain3();
        let id = |n: &str| (0..m.len()).find(|&i| m.element_name(i) == n).unwrap();
        let set: BTreeSet<ElementId> = ["0", "q1", "q2", "q", "p1", "p(q)"].map(id).into();
        assert_eq!(vector_from_ideal(&m, &Ideal(set)).unwrap(), vec(&m, "p>q=p(q),q>r=q1"));
    }

    #[test]
    fn not_ideals() {
        let m = chain3();
        let id = |n: &str| (0..m.len()).find(|&i| m.element_name(i) == n).unwrap();
        for members in [vec!["q1"], vec!["0", "q"], vec!["0", "q1", "q2"]] {
            let set: BTreeSet<ElementId> = members.into_iter().map(id).collect();
            assert!(matches!(vector_from_ideal(&m, &Ideal(set)), Err(Error::NotAnIdeal(_))));
        }
    }

    #[test]
    fn join_propagates_across_overlap() {
        let m = v_order();
        let j = vector_join(&m, &vec(&m, "p>r=0,q>r=q1"), &vec(&m, "p>r=r2,q>r=r2")).unwrap();
        assert_eq!(j, vec(&m, "p>r=r,q>r=q(r)"));
        let c = vec(&m, "p>r=r1,q>r=r1");
        assert_eq!(vector_join(&m, &c, &c).unwrap(), c);
        assert_eq!(vector_meet(&m, &c, &Vector::zero(&m)).unwrap(), Vector::zero(&m));
        assert_eq!(
            vector_join(&m, &vec(&m, "p>r=r1,q>r=0"), &c),
            Err(Error::IncompatibleVector)
        );
    }

    #[test]
    fn atoms_of_vectors() {
        let m = v_order();
        assert!(atoms_below(&m, &Vector::zero(&m)).is_empty());
        assert_eq!(atom_names(&m, &atoms_below(&m, &vec(&m, "p>r=r,q>r=q(r)"))), ["q1", "r1", "r2"]);
        let c = chain3();
        assert_eq!(atom_names(&c, &atoms_below(&c, &vec(&c, "p>q=p1,q>r=0"))), ["p1"]);
    }

    #[test]
    fn literal_errors() {
        let m = chain3();
        assert!(matches!(Vector::parse(&m, "p>q=q2"), Err(Error::KeyMismatch { .. })));
        assert!(matches!(Vector::parse(&m, "p>q=q2,p>q=0,q>r=0"), Err(Error::Parse(_))));
        assert!(matches!(Vector::parse(&m, "p>r=0,q>r=0"), Err(Error::Parse(_))));
        assert!(matches!(Vector::parse(&m, "p>q q2,q>r=0"), Err(Error::Parse(_))));
        assert!(matches!(Vector::parse(&m, "p>q=r1,q>r=0"), Err(Error::Parse(_))));
    }

    #[test]
    fn literal_round_trip() {
        let m = chain3();
        for text in ["p>q=q2,q>r=0", "p>q=p(q),q>r=q(r)", "p>q=q,q>r=r1"] {
            assert_eq!(vec(&m, text).format(&m), text);
        }
    }
}
