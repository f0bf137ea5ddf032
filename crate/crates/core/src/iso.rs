//! Order isomorphism of finite lattices by backtracking.

use crate::lattice::FiniteLattice;

/// Per-element invariants that any isomorphism must preserve.
fn signature(l: &FiniteLattice) -> Vec<(usize, usize, usize, usize)> {
    let heights = l.heights();
    (0..l.len())
        .map(|a| {
            let below = (0..l.len()).filter(|&x| l.leq(x, a)).count();
            (heights[a], l.lower_covers(a).len(), l.upper_covers(a).len(), below)
        })
        .collect()
}

/// Finds an order isomorphism `first -> second`, returned as the image of
/// each element of `first`.
pub fn lattices_isomorphic(first: &FiniteLattice, second: &FiniteLattice) -> Option<Vec<usize>> {
    let n = first.len();
    if n != second.len() {
        return None;
    }
    let sig1 = signature(first);
    let sig2 = signature(second);
    let mut s1 = sig1.clone();
    let mut s2 = sig2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }

    // Assign elements bottom-up so that order constraints prune early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| sig1[a]);

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(first, second, &sig1, &sig2, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    first: &FiniteLattice,
    second: &FiniteLattice,
    sig1: &[(usize, usize, usize, usize)],
    sig2: &[(usize, usize, usize, usize)],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&a) = order.get(depth) else {
        return true;
    };
    for b in 0..second.len() {
        if used[b] || sig1[a] != sig2[b] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| {
            let fx = image[x];
            first.leq(x, a) == second.leq(fx, b) && first.leq(a, x) == second.leq(b, fx)
        });
        if !consistent {
            continue;
        }
        image[a] = b;
        used[b] = true;
        if extend(first, second, sig1, sig2, order, depth + 1, image, used) {
            return true;
        }
        used[b] = false;
        image[a] = usize::MAX;
    }
    false
}

/// True when `map` is a bijection preserving and reflecting the order.
pub fn is_order_isomorphism(first: &FiniteLattice, second: &FiniteLattice, map: &[usize]) -> bool {
    let n = first.len();
    if n != second.len() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &b in map {
        if b >= n || std::mem::replace(&mut seen[b], true) {
            return false;
        }
    }
    (0..n).all(|x| (0..n).all(|y| first.leq(x, y) == second.leq(map[x], map[y])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_pairs(n: usize, rel: &[(usize, usize)]) -> FiniteLattice {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(a, b) in rel {
            leq[a * n + b] = true;
        }
        FiniteLattice::from_leq((0..n).map(|i| format!("e{i}")).collect(), leq).unwrap()
    }

    #[test]
    fn chains() {
        let c = from_pairs(3, &[(0, 1), (0, 2), (1, 2)]);
        let d = from_pairs(3, &[(2, 1), (2, 0), (1, 0)]);
        let map = lattices_isomorphic(&c, &d).unwrap();
        assert_eq!(map, vec![2, 1, 0]);
        assert!(is_order_isomorphism(&c, &d, &map));
    }

    #[test]
    fn different_sizes() {
        let c = from_pairs(3, &[(0, 1), (0, 2), (1, 2)]);
        let b = from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        assert!(lattices_isomorphic(&c, &b).is_none());
    }

    #[test]
    fn same_size_not_isomorphic() {
        let chain4 = from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let square = from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        assert!(lattices_isomorphic(&chain4, &square).is_none());
    }

    #[test]
    fn rejects_bad_maps() {
        let c = from_pairs(2, &[(0, 1)]);
        assert!(!is_order_isomorphism(&c, &c, &[1, 0]));
        assert!(!is_order_isomorphism(&c, &c, &[0, 0]));
        assert!(is_order_isomorphism(&c, &c, &[0, 1]));
    }
}
