//! Cut-order strategies and the seeded generator behind them.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// 64-bit linear congruential generator, `x ← a·x + c mod 2⁶⁴`, with the
/// Numerical Recipes (3rd ed.) constants. Outputs the new state.
///
/// Kept this simple so traces can be replayed from any language:
/// `pick(len)` is `(next() >> 32) % len`.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 3_935_559_000_370_003_845;
    pub const INCREMENT: u64 = 2_691_343_689_449_507_681;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(Self::MULTIPLIER).wrapping_add(Self::INCREMENT);
        self.state
    }

    /// Uniform-ish index in `0..len`; `len` must be positive.
    pub fn pick(&mut self, len: usize) -> usize {
        assert!(len > 0, "pick from an empty range");
        ((self.next_u64() >> 32) % len as u64) as usize
    }
}

/// Rule for choosing the next cut among the eligible failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// First eligible failure in canonical order.
    Lexicographic,
    /// Last eligible failure in canonical order.
    ReverseLexicographic,
    /// Index drawn from an [`Lcg`] seeded once per run.
    SeededRandom(u64),
}

impl Strategy {
    pub fn chooser(self) -> Chooser {
        Chooser {
            strategy: self,
            rng: match self {
                Strategy::SeededRandom(seed) => Some(Lcg::new(seed)),
                _ => None,
            },
        }
    }

    /// `lex`, `revlex`, then `count - 2` random strategies seeded from `seed`.
    pub fn family(count: usize, seed: u64) -> Vec<Strategy> {
        let mut out = vec![Strategy::Lexicographic, Strategy::ReverseLexicographic];
        out.truncate(count);
        let mut rng = Lcg::new(seed);
        while out.len() < count {
            out.push(Strategy::SeededRandom(rng.next_u64()));
        }
        out
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Lexicographic => f.write_str("lex"),
            Strategy::ReverseLexicographic => f.write_str("revlex"),
            Strategy::SeededRandom(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(Strategy::Lexicographic),
            "revlex" => Ok(Strategy::ReverseLexicographic),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(Strategy::SeededRandom)
                .ok_or_else(|| Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

/// Per-run selection state.
#[derive(Debug, Clone)]
pub struct Chooser {
    strategy: Strategy,
    rng: Option<Lcg>,
}

impl Chooser {
    pub fn choose(&mut self, eligible: usize) -> usize {
        match (self.strategy, &mut self.rng) {
            (Strategy::Lexicographic, _) => 0,
            (Strategy::ReverseLexicographic, _) => eligible - 1,
            (_, Some(rng)) => rng.pick(eligible),
            (Strategy::SeededRandom(_), None) => unreachable!("random chooser has a generator"),
        }
    }
}
