//! Counts and lists quandle colorings of a catalog diagram.
//!
//! cargo run --example count_colorings

use quiverlink::coloring::{arc_classes, count_colorings, enumerate_colorings};
use quiverlink::quandle::builtin;
use quiverlink::Catalog;

fn main() -> quiverlink::Result<()> {
    let catalog = Catalog::builtin();
    let d = catalog.get("3_1")?.diagram();
    let x = builtin("dihedral:3")?.into_arc();
    println!("{} has {} arcs", d.name(), arc_classes(d).len());
    println!("dihedral:3 colorings: {}", count_colorings(d, &x));
    for c in enumerate_colorings(d, &x) {
        println!("  {c}");
    }
    Ok(())
}
