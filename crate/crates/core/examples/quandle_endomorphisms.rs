//! Builds quandles, checks the axioms and enumerates endomorphisms.
//!
//! cargo run --example quandle_endomorphisms

use quiverlink::quandle::{builtin, enumerate_endos, format_quandle, verify_axioms, Quandle};

fn main() -> quiverlink::Result<()> {
    let core3 = Quandle::dihedral(3)?;
    print!("{}", format_quandle(&core3));

    let bad = vec![vec![2, 1], vec![1, 2]];
    for v in verify_axioms(&bad)?.violations {
        println!("rejected table: {v}");
    }

    let x = builtin("paper-ex1")?.into_arc();
    let endos = enumerate_endos(&x);
    println!("{} has {} endomorphisms; the first few:", x.name(), endos.len());
    for f in endos.iter().take(5) {
        println!("  {f}");
    }

    let alex = Quandle::alexander(7, 6)?;
    println!("alexander(7, 6) equals dihedral(7): {}", alex.rows() == Quandle::dihedral(7)?.rows());
    Ok(())
}
