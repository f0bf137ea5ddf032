//! Congruences of finite lattices and the congruence lattice.

use std::collections::BTreeSet;

use crate::lattice::FiniteLattice;

/// A partition of the lattice elements, stored as one class id per element.
///
/// Class ids are normalized so that classes are numbered in order of their
/// smallest member; two equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    class: Vec<u32>,
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Congruence { class: (0..n as u32).collect() }
    }

    pub fn full(n: usize) -> Self {
        Congruence { class: vec![0; n] }
    }

    /// Normalizes arbitrary class labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let class = labels
            .iter()
            .map(|l| {
                let next = map.len() as u32;
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { class }
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class[a] == self.class[b]
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class[a] as usize
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let k = self.class.iter().max().map_or(0, |&m| m as usize + 1);
        let mut blocks = vec![Vec::new(); k];
        for (x, &c) in self.class.iter().enumerate() {
            blocks[c as usize].push(x);
        }
        blocks
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        let mut image = vec![u32::MAX; self.len()];
        self.class.iter().zip(&other.class).all(|(&c, &d)| {
            let slot = &mut image[c as usize];
            if *slot == u32::MAX {
                *slot = d;
            }
            *slot == d
        })
    }

    /// Join in the partition lattice: the transitive closure of the union.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for part in [&self.class, &other.class] {
            let mut first = vec![usize::MAX; n];
            for (x, &c) in part.iter().enumerate() {
                let f = &mut first[c as usize];
                if *f == usize::MAX {
                    *f = x;
                } else {
                    let (a, b) = (find(&mut parent, *f), find(&mut parent, x));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Congruence::from_labels(&roots)
    }

    /// Checks the substitution property against all of `lattice`.
    pub fn is_congruence_of(&self, lattice: &FiniteLattice) -> bool {
        let n = lattice.len();
        for a in 0..n {
            for b in (a + 1)..n {
                if !self.related(a, b) {
                    continue;
                }
                for c in 0..n {
                    if !self.related(lattice.meet(a, c), lattice.meet(b, c))
                        || !self.related(lattice.join(a, c), lattice.join(b, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .blocks()
            .into_iter()
            .filter(|b| b.len() > 1)
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        if parts.is_empty() {
            "id".into()
        } else {
            format!("[{}]", parts.join("|"))
        }
    }
}

/// The smallest congruence identifying `a` and `b`.
///
/// Works from a queue of pairs to identify; every pair that actually merges
/// two classes pushes all its translates `(x∧c, y∧c)` and `(x∨c, y∨c)`.
pub fn principal_congruence(lattice: &FiniteLattice, a: usize, b: usize) -> Congruence {
    let n = lattice.len();
    let mut class: Vec<usize> = (0..n).collect();
    let mut members: Vec<Vec<usize>> = (0..n).map(|x| vec![x]).collect();
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        let (cx, cy) = (class[x], class[y]);
        if cx == cy {
            continue;
        }
        let (keep, gone) = if members[cx].len() >= members[cy].len() { (cx, cy) } else { (cy, cx) };
        let moved = std::mem::take(&mut members[gone]);
        for &z in &moved {
            class[z] = keep;
        }
        members[keep].extend(moved);
        for c in 0..n {
            queue.push((lattice.meet(x, c), lattice.meet(y, c)));
            queue.push((lattice.join(x, c), lattice.join(y, c)));
        }
    }
    Congruence::from_labels(&class)
}

/// All congruences of `lattice`, sorted by number of classes descending
/// (finest first), then by class vector.
///
/// Every congruence is a join of congruences `con(j_*, j)` with `j`
/// join-irreducible and `j_*` its unique lower cover, so the principal
/// congruences of those prime quotients are generated and closed under joins.
pub fn congruences(lattice: &FiniteLattice) -> Vec<Congruence> {
    let n = lattice.len();
    let generators: BTreeSet<Congruence> = lattice
        .join_irreducibles()
        .into_iter()
        .map(|j| principal_congruence(lattice, lattice.lower_covers(j)[0], j))
        .collect();
    let mut all: BTreeSet<Congruence> = BTreeSet::new();
    all.insert(Congruence::identity(n));
    let mut frontier: Vec<Congruence> = vec![Congruence::identity(n)];
    while let Some(c) = frontier.pop() {
        for g in &generators {
            let next = c.join(g);
            if all.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Congruence> = all.into_iter().collect();
    out.sort_by(|x, y| {
        let kx = x.blocks().len();
        let ky = y.blocks().len();
        ky.cmp(&kx).then_with(|| x.cmp(y))
    });
    out
}

/// The lattice of all congruences of `lattice`, ordered by refinement.
pub fn congruence_lattice(lattice: &FiniteLattice) -> FiniteLattice {
    congruence_lattice_of(&congruences(lattice))
}

pub fn congruence_lattice_of(cons: &[Congruence]) -> FiniteLattice {
    let k = cons.len();
    let labels = cons.iter().map(Congruence::describe).collect();
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            leq[i * k + j] = cons[i].refines(&cons[j]);
        }
    }
    FiniteLattice::from_leq(labels, leq).expect("congruences of a lattice form a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(n: usize, rel: &[(usize, usize)]) -> FiniteLattice {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(a, b) in rel {
            leq[a * n + b] = true;
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        FiniteLattice::from_leq(labels, leq).unwrap()
    }

    #[test]
    fn two_element_lattice() {
        let l = lattice(2, &[(0, 1)]);
        let cons = congruences(&l);
        assert_eq!(cons, vec![Congruence::identity(2), Congruence::full(2)]);
        assert_eq!(congruence_lattice(&l).len(), 2);
    }

    #[test]
    fn principal_congruence_in_chain_is_interval() {
        let l = lattice(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let c = principal_congruence(&l, 1, 2);
        assert_eq!(c.blocks(), vec![vec![0], vec![1, 2], vec![3]]);
        assert!(c.is_congruence_of(&l));
    }

    #[test]
    fn refinement_and_join() {
        let a = Congruence::from_labels(&[0, 0, 1, 2]);
        let b = Congruence::from_labels(&[0, 1, 1, 2]);
        assert!(Congruence::identity(4).refines(&a));
        assert!(!a.refines(&b));
        assert_eq!(a.join(&b), Congruence::from_labels(&[5, 5, 5, 7]));
        assert!(a.refines(&Congruence::full(4)));
    }

    #[test]
    fn describe_blocks() {
        assert_eq!(Congruence::identity(3).describe(), "id");
        assert_eq!(Congruence::from_labels(&[0, 1, 0, 1]).describe(), "[0,2|1,3]");
    }
}
