//! Builds `M` for each named order and lists its elements and suborders.
//!
//! `cargo run --example build_chopped -- [poset.json]`

use chopped::cli::build_summary;
use chopped::corpus::corpus;
use chopped::{ChoppedLattice, Poset};

fn show(name: &str, poset: &Poset) -> chopped::Result<()> {
    let m = ChoppedLattice::build(poset)?;
    println!("{name}: {poset}");
    println!("  {}", build_summary(&m));
    let elements: Vec<String> = (0..m.len()).map(|id| m.element_name(id)).collect();
    println!("  elements: {}", elements.join(" "));
    let atoms: Vec<String> = m.global_atoms().iter().map(|&a| m.element_name(a)).collect();
    println!("  atoms: {}", atoms.join(" "));
    for s in m.suborders() {
        let [p, q, r] = s.names(poset);
        println!("  {}({p},{q},{r}) meets in {}", s.kind, m.element_name(m.overlap_top(s)));
    }
    Ok(())
}

fn main() -> chopped::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).map_err(|e| chopped::Error::Parse(e.to_string()))?;
        return show(&path, &Poset::parse_json(&text)?);
    }
    for (name, poset) in corpus(0, 0) {
        show(&name, &poset)?;
    }
    Ok(())
}
