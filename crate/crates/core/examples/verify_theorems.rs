//! Sweeps the corpus and prints one summary line per order.
//!
//! `cargo run --example verify_theorems -- [random-count] [seed]`

use std::time::Instant;

use chopped::corpus::corpus;
use chopped::oracle::{verify_theorems, VerifyConfig};

fn main() -> chopped::Result<()> {
    let mut args = std::env::args().skip(1);
    let random = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let config = VerifyConfig::default();
    let start = Instant::now();
    for (name, poset) in corpus(random, seed) {
        let report = verify_theorems(&poset, &config)?;
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.failed > 0)
            .map(|c| c.name.as_str())
            .collect();
        println!(
            "{name:<10} ideals {:>4}  pairs {:>4}/{:<5}{}  cuts V {:>3} A {:>3} B {:>3}  exhaustive {:>4}  {}",
            report.ideals,
            report.swept_pairs,
            report.comparable_pairs,
            if report.sampled { " sampled" } else { "        " },
            report.cuts.v_cuts,
            report.cuts.c_cuts_case_a,
            report.cuts.c_cuts_case_b,
            report.cuts.exhaustive_pairs,
            if failed.is_empty() { "ok".to_owned() } else { format!("FAILED {}", failed.join(" ")) }
        );
        if let Some(c) = report.checks.iter().find_map(|c| c.first_counterexample.as_ref()) {
            println!("  {}", serde_json::to_string(c).expect("serializes"));
        }
    }
    println!("elapsed {:.1?}", start.elapsed());
    Ok(())
}
