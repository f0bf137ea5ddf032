//! Shows `Split(u, v)` with its witnesses and the resulting complement.

use chopped::corpus::{four_chain, v_order};
use chopped::{s1960, split_set, ChoppedLattice, Poset, Vector};

fn report(poset: &Poset, u: &str, v: &str) -> chopped::Result<()> {
    let m = ChoppedLattice::build(poset)?;
    let (u, v) = (Vector::parse(&m, u)?, Vector::parse(&m, v)?);
    let split = split_set(&m, &u, &v);
    println!("{poset}\n  u = {}\n  v = {}", u.format(&m), v.format(&m));
    println!("  {}", split.to_json());
    println!("  s1960 = {}", s1960(&m, &u, &v).format(&m));
    Ok(())
}

fn main() -> chopped::Result<()> {
    report(&v_order(), "p>r=r2,q>r=r2", "p>r=r,q>r=q(r)")?;
    report(&four_chain(), "p>q=q2,q>r=r2,r>s=0", "p>q=p(q),q>r=q(r),r>s=r(s)")
}
