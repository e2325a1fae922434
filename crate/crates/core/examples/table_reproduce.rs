//! Recomputes the surface-link polynomial table and compares it with the print.
//!
//! cargo run --example table_reproduce

use quiverlink::table::reproduce;
use quiverlink::Catalog;

fn main() -> quiverlink::Result<()> {
    let report = reproduce(&Catalog::builtin())?;
    print!("{}", report.to_text());
    println!("consistent: {}", report.consistent());
    Ok(())
}
