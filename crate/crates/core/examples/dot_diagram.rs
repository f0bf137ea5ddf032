//! Prints the diagram of `M` for the 3-chain with the case-B cut colored.
//!
//! `cargo run --example dot_diagram | dot -Tsvg > m.svg`

use chopped::corpus::three_chain;
use chopped::dot::{to_dot, Highlight};
use chopped::{run_algorithm, ChoppedLattice, Strategy, Vector};

fn main() -> chopped::Result<()> {
    let m = ChoppedLattice::build(&three_chain())?;
    let u = Vector::parse(&m, "p>q=q2,q>r=0")?;
    let v = Vector::parse(&m, "p>q=p(q),q>r=q(r)")?;
    let run = run_algorithm(&m, &u, &v, Strategy::Lexicographic)?;
    print!("{}", to_dot(&m, Some(&Highlight::from_run(&m, &run))));
    Ok(())
}
