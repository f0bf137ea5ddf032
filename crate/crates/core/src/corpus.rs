//! Small orders used as a test corpus.

use crate::poset::Poset;
use crate::strategy::Lcg;

fn named(elements: &[&str], covers: &[(&str, &str)]) -> Poset {
    Poset::new(elements, covers).expect("corpus order is valid")
}

pub fn two_chain() -> Poset {
    named(&["p", "q"], &[("p", "q")])
}

pub fn three_chain() -> Poset {
    named(&["p", "q", "r"], &[("p", "q"), ("q", "r")])
}

pub fn four_chain() -> Poset {
    named(&["p", "q", "r", "s"], &[("p", "q"), ("q", "r"), ("r", "s")])
}

/// `p ≻ r`, `q ≻ r`.
pub fn v_order() -> Poset {
    named(&["p", "q", "r"], &[("p", "r"), ("q", "r")])
}

/// `p ≻ q`, `p ≻ r`.
pub fn hat_order() -> Poset {
    named(&["p", "q", "r"], &[("p", "q"), ("p", "r")])
}

/// The zigzag `a < b > c < d`.
pub fn fence() -> Poset {
    named(&["a", "b", "c", "d"], &[("b", "a"), ("b", "c"), ("d", "c")])
}

/// One top covering two middles covering one bottom.
pub fn diamond() -> Poset {
    named(&["b", "l", "r", "t"], &[("t", "l"), ("t", "r"), ("l", "b"), ("r", "b")])
}

/// A random order on 2 to `max_elements` elements without isolated points.
///
/// Draws a relation on `0..n` respecting index order, closes it
/// transitively and keeps the covers. Rejects and redraws until every
/// element lies in some cover.
pub fn random_poset(rng: &mut Lcg, max_elements: usize) -> Poset {
    const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];
    assert!((2..=NAMES.len()).contains(&max_elements));
    loop {
        let n = 2 + rng.pick(max_elements - 1);
        let mut less = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                less[i * n + j] = rng.pick(2) == 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if less[i * n + k] && less[k * n + j] {
                        less[i * n + j] = true;
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if less[i * n + j] && !(0..n).any(|k| less[i * n + k] && less[k * n + j]) {
                    covers.push((NAMES[j], NAMES[i]));
                }
            }
        }
        let isolated = (0..n).any(|x| !covers.iter().any(|&(u, l)| u == NAMES[x] || l == NAMES[x]));
        if !isolated {
            return named(&NAMES[..n], &covers);
        }
    }
}

/// The seven named orders plus `random` seeded random ones with at most
/// five elements.
pub fn corpus(random: usize, seed: u64) -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = vec![
        ("2-chain".into(), two_chain()),
        ("3-chain".into(), three_chain()),
        ("4-chain".into(), four_chain()),
        ("V".into(), v_order()),
        ("hat".into(), hat_order()),
        ("fence".into(), fence()),
        ("diamond".into(), diamond()),
    ];
    let mut rng = Lcg::new(seed);
    for i in 0..random {
        out.push((format!("random-{i}"), random_poset(&mut rng, 5)));
    }
    out
}
