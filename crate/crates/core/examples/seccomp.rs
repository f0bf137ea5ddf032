//! The two worked examples: one V-cut on the V-order, one case-B C-cut on
//! the 3-chain. Each run is repeated under every strategy.

use chopped::corpus::{three_chain, v_order};
use chopped::{run_algorithm, s1960, ChoppedLattice, Poset, Strategy, Vector};

fn demo(poset: &Poset, u: &str, v: &str) -> chopped::Result<()> {
    let m = ChoppedLattice::build(poset)?;
    let (u, v) = (Vector::parse(&m, u)?, Vector::parse(&m, v)?);
    println!("{poset}");
    println!("  u = {}\n  v = {}", u.format(&m), v.format(&m));
    for strategy in Strategy::family(4, 7) {
        let run = run_algorithm(&m, &u, &v, strategy)?;
        println!("  [{strategy}] m = {}  s = {}", run.m.format(&m), run.s.format(&m));
        for line in run.trace_json_lines(&m) {
            println!("    {line}");
        }
    }
    println!("  s1960 = {}", s1960(&m, &u, &v).format(&m));
    Ok(())
}

fn main() -> chopped::Result<()> {
    demo(&v_order(), "p>r=r2,q>r=r2", "p>r=r,q>r=q(r)")?;
    demo(&three_chain(), "p>q=q2,q>r=0", "p>q=p(q),q>r=q(r)")?;
    demo(&three_chain(), "p>q=q2,q>r=0", "p>q=p(q),q>r=q1")
}
