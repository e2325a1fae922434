//! Writes a quiver as DOT and JSON and reads the JSON back.
//!
//! cargo run --example quiver_export

use quiverlink::quandle::builtin;
use quiverlink::quiver::{export_dot, export_json, full_quiver, import_json};
use quiverlink::Catalog;

fn main() -> quiverlink::Result<()> {
    let catalog = Catalog::builtin();
    let x = builtin("dihedral:3")?.into_arc();
    let q = full_quiver(catalog.get("0_1")?.diagram(), &x);
    print!("{}", export_dot(&q));
    let json = export_json(&q);
    let back = import_json(&json)?;
    println!("JSON round trip preserved the quiver: {}", back == q);
    Ok(())
}
