//! Generic finite lattices stored as order matrix plus meet/join tables.

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl FiniteLattice {
    /// Builds a lattice from a partial order given as a row-major `leq` matrix.
    ///
    /// Meets and joins are derived from the order; fails if the order is not
    /// a partial order or some pair lacks a meet or a join.
    pub fn from_leq(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::NotALattice(format!("order matrix is not {n}x{n}")));
        }
        check_partial_order(&leq, n)?;
        let down_size: Vec<usize> = (0..n).map(|a| (0..n).filter(|&x| leq[x * n + a]).count()).collect();

        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                // The meet is the common lower bound with the largest down-set;
                // it must then lie above every other common lower bound.
                let lower: Vec<usize> =
                    (0..n).filter(|&x| leq[x * n + a] && leq[x * n + b]).collect();
                let m = *lower
                    .iter()
                    .max_by_key(|&&x| down_size[x])
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no lower bound", labels[a], labels[b])))?;
                if lower.iter().any(|&x| !leq[x * n + m]) {
                    return Err(Error::NotALattice(format!("{} and {} have no meet", labels[a], labels[b])));
                }
                let upper: Vec<usize> =
                    (0..n).filter(|&x| leq[a * n + x] && leq[b * n + x]).collect();
                let j = *upper
                    .iter()
                    .min_by_key(|&&x| down_size[x])
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no upper bound", labels[a], labels[b])))?;
                if upper.iter().any(|&x| !leq[j * n + x]) {
                    return Err(Error::NotALattice(format!("{} and {} have no join", labels[a], labels[b])));
                }
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }
        Ok(FiniteLattice { labels, leq, meet, join })
    }

    /// Builds a lattice from operation tables that are already known.
    ///
    /// Checks that `a <= b` iff `a ∧ b = a` iff `a ∨ b = b`; the lattice
    /// axioms themselves are taken on trust.
    pub fn from_tables(labels: Vec<String>, meet: Vec<u32>, join: Vec<u32>) -> Result<Self> {
        let n = labels.len();
        if meet.len() != n * n || join.len() != n * n {
            return Err(Error::NotALattice(format!("operation tables are not {n}x{n}")));
        }
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                let by_meet = meet[a * n + b] as usize == a;
                let by_join = join[a * n + b] as usize == b;
                if by_meet != by_join {
                    return Err(Error::NotALattice(format!(
                        "meet and join disagree on {} <= {}",
                        labels[a], labels[b]
                    )));
                }
                leq[a * n + b] = by_meet;
            }
        }
        check_partial_order(&leq, n)?;
        Ok(FiniteLattice { labels, leq, meet, join })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).fold(0, |acc, x| self.meet(acc, x))
    }

    pub fn top(&self) -> usize {
        (0..self.len()).fold(0, |acc, x| self.join(acc, x))
    }

    /// `a ≺ b`: `a < b` with nothing strictly in between.
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        a != b
            && self.leq(a, b)
            && !(0..self.len()).any(|x| x != a && x != b && self.leq(a, x) && self.leq(x, b))
    }

    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.is_cover(a, b)).collect()
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.is_cover(a, b)).collect()
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.lower_covers(a).len() == 1).collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        let bottom = self.bottom();
        (0..self.len()).filter(|&a| self.is_cover(bottom, a)).collect()
    }

    /// Length of the longest chain from the bottom to `a`.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (0..n).filter(|&x| self.leq(x, a)).count());
        let mut height = vec![0usize; n];
        for &b in &order {
            height[b] = self.lower_covers(b).iter().map(|&a| height[a] + 1).max().unwrap_or(0);
        }
        height
    }

    /// Checks `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` on all triples.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    /// All `x` with `x ∧ a = bottom` and `x ∨ a = b`.
    pub fn relative_complements(&self, a: usize, b: usize) -> Vec<usize> {
        let bottom = self.bottom();
        (0..self.len())
            .filter(|&x| self.meet(x, a) == bottom && self.join(x, a) == b)
            .collect()
    }
}

fn check_partial_order(leq: &[bool], n: usize) -> Result<()> {
    for a in 0..n {
        if !leq[a * n + a] {
            return Err(Error::NotALattice("order is not reflexive".into()));
        }
        for b in 0..n {
            if a != b && leq[a * n + b] && leq[b * n + a] {
                return Err(Error::NotALattice("order is not antisymmetric".into()));
            }
            if leq[a * n + b] {
                for c in 0..n {
                    if leq[b * n + c] && !leq[a * n + c] {
                        return Err(Error::NotALattice("order is not transitive".into()));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Down-closed subsets of `P` ordered by inclusion.
///
/// Elements are listed by increasing size, then by bitmask; labels list the
/// members in name order, e.g. `{p,r}`.
pub fn downset_lattice(poset: &Poset) -> FiniteLattice {
    let n = poset.len();
    assert!(n < 32, "downset enumeration supports fewer than 32 elements");
    let closed = |mask: u32| {
        (0..n).filter(|&x| mask >> x & 1 == 1).all(|x| {
            (0..n).all(|y| !poset.leq(y, x) || mask >> y & 1 == 1)
        })
    };
    let mut sets: Vec<u32> = (0u32..1 << n).filter(|&m| closed(m)).collect();
    sets.sort_by_key(|&m| (m.count_ones(), m));
    let labels = sets
        .iter()
        .map(|&m| {
            let names: Vec<&str> =
                (0..n).filter(|&x| m >> x & 1 == 1).map(|x| poset.name(x)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let k = sets.len();
    let mut leq = vec![false; k * k];
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            leq[i * k + j] = a & b == a;
        }
    }
    FiniteLattice::from_leq(labels, leq).expect("down-sets form a lattice")
}
