//! In-degree quiver polynomial of the (4,2)-torus link for one endomorphism.
//!
//! cargo run --example quiver_polynomial

use quiverlink::quandle::builtin;
use quiverlink::quiver::build_quiver;
use quiverlink::{Catalog, QuandleMap};

fn main() -> quiverlink::Result<()> {
    let catalog = Catalog::builtin();
    let d = catalog.get("L4a1")?.diagram();
    let x = builtin("paper-ex2")?.into_arc();
    let phi = QuandleMap::from_one_based(x.clone(), x.clone(), &[1, 1, 2])?;
    let q = build_quiver(d, &x, &[phi])?;
    let p = q.in_degree_polynomial();
    println!("{} vertices, polynomial {p}", q.vertices().len());
    println!("checksum holds: {}", p.satisfies_checksum(q.endos().len()));
    Ok(())
}
