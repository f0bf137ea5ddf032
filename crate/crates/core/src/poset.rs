//! Finite orders given by their cover relation.
//!
//! Elements are kept sorted by name, so element indices, covering pairs and
//! everything downstream follow the lexicographic order of symbol names.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A covering pair `upper ≻ lower`, as indices into [`Poset::elements`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoveringPair {
    pub upper: usize,
    pub lower: usize,
}

/// A finite order with its cover relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    covers: Vec<CoveringPair>,
    // leq[a * n + b] iff a <= b
    leq: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

fn check_symbol(s: &str) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Parse("empty element name".into()));
    }
    if let Some(c) = s
        .chars()
        .find(|c| c.is_whitespace() || matches!(c, '>' | ',' | '=' | '(' | ')'))
    {
        return Err(Error::Parse(format!("element name {s:?} contains {c:?}")));
    }
    Ok(())
}

impl Poset {
    /// Builds an order from element names and `(upper, lower)` cover pairs.
    pub fn new<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::with_capacity(elements.len());
        for e in elements {
            check_symbol(e.as_ref())?;
            names.push(e.as_ref().to_owned());
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("duplicate element {}", w[0])));
        }
        let index: BTreeMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Parse(format!("cover mentions unknown element {s}")))
        };

        let mut pairs = BTreeSet::new();
        for (u, l) in covers {
            let pair = CoveringPair { upper: lookup(u.as_ref())?, lower: lookup(l.as_ref())? };
            if pair.upper == pair.lower {
                return Err(Error::Cycle(names[pair.upper].clone()));
            }
            if !pairs.insert(pair) {
                return Err(Error::Parse(format!(
                    "duplicate cover {}>{}",
                    u.as_ref(),
                    l.as_ref()
                )));
            }
        }
        let covers: Vec<CoveringPair> = pairs.into_iter().collect();
        let n = names.len();

        // Reflexive-transitive closure, Floyd–Warshall style.
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for c in &covers {
            leq[c.lower * n + c.upper] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for c in &covers {
            if leq[c.upper * n + c.lower] {
                return Err(Error::Cycle(names[c.upper].clone()));
            }
        }

        // A cover is redundant when lower reaches upper through some other element.
        for c in &covers {
            let implied = (0..n).any(|z| {
                z != c.lower
                    && z != c.upper
                    && leq[c.lower * n + z]
                    && leq[z * n + c.upper]
            });
            if implied {
                return Err(Error::RedundantCover {
                    upper: names[c.upper].clone(),
                    lower: names[c.lower].clone(),
                });
            }
        }

        Ok(Poset { elements: names, covers, leq })
    }

    /// Parses the JSON description `{"elements": [...], "covers": [[upper, lower], ...]}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: PosetJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let covers: Vec<(&str, &str)> =
            raw.covers.iter().map(|(u, l)| (u.as_str(), l.as_str())).collect();
        let elements: Vec<&str> = raw.elements.iter().map(String::as_str).collect();
        Poset::new(&elements, &covers)
    }

    pub fn to_json(&self) -> String {
        let raw = PosetJson {
            elements: self.elements.clone(),
            covers: self
                .covers
                .iter()
                .map(|c| (self.elements[c.upper].clone(), self.elements[c.lower].clone()))
                .collect(),
        };
        serde_json::to_string(&raw).expect("plain strings serialize")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(name)).ok()
    }

    /// Covering pairs in canonical order (lexicographic on upper, then lower name).
    pub fn covering_pairs(&self) -> &[CoveringPair] {
        &self.covers
    }

    /// Position of a cover in [`Poset::covering_pairs`].
    pub fn pair_index(&self, upper: usize, lower: usize) -> Option<usize> {
        self.covers.binary_search(&CoveringPair { upper, lower }).ok()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn covers(&self, upper: usize, lower: usize) -> bool {
        self.pair_index(upper, lower).is_some()
    }

    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.lower == x).map(|c| c.upper)
    }

    pub fn lower_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.upper == x).map(|c| c.lower)
    }

    pub fn pair_name(&self, pair: CoveringPair) -> String {
        format!("{}>{}", self.elements[pair.upper], self.elements[pair.lower])
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self.covers.iter().map(|&c| self.pair_name(c)).collect();
        write!(f, "{{{}}} covers [{}]", self.elements.join(","), covers.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain() {
        let p = Poset::parse_json(r#"{"elements":["p","q"],"covers":[["p","q"]]}"#).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.covering_pairs(), &[CoveringPair { upper: 0, lower: 1 }]);
        assert!(p.lt(1, 0));
    }

    #[test]
    fn v_order_pairs_are_canonical() {
        let p = Poset::parse_json(r#"{"elements":["r","q","p"],"covers":[["q","r"],["p","r"]]}"#)
            .unwrap();
        let names: Vec<String> = p.covering_pairs().iter().map(|&c| p.pair_name(c)).collect();
        assert_eq!(names, ["p>r", "q>r"]);
    }

    #[test]
    fn three_chain_pairs() {
        let p = Poset::new(&["p", "q", "r"], &[("q", "r"), ("p", "q")]).unwrap();
        let names: Vec<String> = p.covering_pairs().iter().map(|&c| p.pair_name(c)).collect();
        assert_eq!(names, ["p>q", "q>r"]);
        assert!(p.lt(2, 0));
    }

    #[test]
    fn redundant_cover_rejected() {
        let err = Poset::parse_json(
            r#"{"elements":["p","q","r"],"covers":[["p","q"],["q","r"],["p","r"]]}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::RedundantCover { upper: "p".into(), lower: "r".into() });
    }

    #[test]
    fn cycles_rejected() {
        let err = Poset::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
        let err = Poset::new(&["a"], &[("a", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
    }

    #[test]
    fn malformed_input() {
        for text in [
            "not json",
            r#"{"elements":["p"]}"#,
            r#"{"elements":["p","p"],"covers":[]}"#,
            r#"{"elements":["p","q"],"covers":[["p","x"]]}"#,
            r#"{"elements":["p","q"],"covers":[["p","q"],["p","q"]]}"#,
            r#"{"elements":["p q","r"],"covers":[]}"#,
            r#"{"elements":["",""],"covers":[]}"#,
            r#"{"elements":["a>b","c"],"covers":[]}"#,
            r#"{"elements":["p","q"],"covers":[["p","q","r"]]}"#,
        ] {
            assert!(matches!(Poset::parse_json(text), Err(Error::Parse(_))), "{text}");
        }
    }

    #[test]
    fn json_round_trip() {
        let p = Poset::new(&["a", "b", "c", "d"], &[("b", "a"), ("b", "c"), ("d", "c")]).unwrap();
        assert_eq!(Poset::parse_json(&p.to_json()).unwrap(), p);
    }
}
