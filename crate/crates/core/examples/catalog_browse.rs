//! Lists the built-in catalog with basic counts.
//!
//! cargo run --example catalog_browse

use quiverlink::Catalog;

fn main() -> quiverlink::Result<()> {
    let catalog = Catalog::load()?;
    for e in catalog.entries() {
        let d = e.diagram();
        println!(
            "{:<14} {:<12} ch {:>2}  {} diagram(s)  {}",
            e.name,
            e.kind.to_string(),
            d.ch_number(),
            e.diagrams.len(),
            e.note
        );
    }
    Ok(())
}
