//! Compares the congruence lattice of `Id M` with the down-sets of `P`.
//!
//! `cargo run --example representation -- [random-count] [seed]`

use chopped::corpus::corpus;
use chopped::oracle::{size_cap_from_env, verify_representation};

fn main() -> chopped::Result<()> {
    let mut args = std::env::args().skip(1);
    let random = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    for (name, poset) in corpus(random, seed) {
        let r = verify_representation(&poset, size_cap_from_env())?;
        println!(
            "{name:<10} |Id M| {:>4}  |Con| {:>3}  |downsets| {:>3}  distributive {:<5}  isomorphic {}",
            r.ideal_count, r.congruence_count, r.downset_count, r.distributive, r.isomorphic
        );
        if name == "V" {
            for (con, down) in &r.bijection {
                println!("    {con}  ->  {down}");
            }
        }
    }
    Ok(())
}
