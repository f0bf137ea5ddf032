//! Explores every valid cut sequence for each comparable pair of a small
//! order and counts the distinct results.
//!
//! `cargo run --example confluence_exhaustive -- [corpus-name]`

use std::collections::BTreeMap;

use chopped::algorithm::enumerate_outcomes;
use chopped::corpus::corpus;
use chopped::oracle::{enumerate_ideals, DEFAULT_SIZE_CAP};
use chopped::vector::vector_leq;
use chopped::ChoppedLattice;

fn main() -> chopped::Result<()> {
    let wanted = std::env::args().nth(1).unwrap_or_else(|| "diamond".into());
    let Some((_, poset)) = corpus(20, 1).into_iter().find(|(n, _)| *n == wanted) else {
        eprintln!("unknown order {wanted}");
        std::process::exit(2);
    };
    let m = ChoppedLattice::build(&poset)?;
    let ideals = enumerate_ideals(&m, DEFAULT_SIZE_CAP)?;
    // sequences per pair -> number of pairs
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut worst = 0;
    for u in &ideals {
        for v in ideals.iter().filter(|v| vector_leq(u, v)) {
            let out = enumerate_outcomes(&m, u, v, 1_000_000)?;
            worst = worst.max(out.results.len());
            *histogram.entry(out.sequences).or_default() += 1;
        }
    }
    println!("{wanted}: {} ideals", ideals.len());
    for (sequences, pairs) in histogram {
        println!("  {pairs:>5} pairs with {sequences} cut sequence(s)");
    }
    println!("  most distinct results for one pair: {worst}");
    Ok(())
}
