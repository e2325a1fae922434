//! Two surface-links with equal coloring counts but non-isomorphic quivers.
//!
//! cargo run --example quiver_isomorphism

use quiverlink::coloring::count_colorings;
use quiverlink::quandle::builtin;
use quiverlink::quiver::{are_isomorphic, build_quiver};
use quiverlink::{Catalog, QuandleMap};

fn main() -> quiverlink::Result<()> {
    let catalog = Catalog::builtin();
    let x = builtin("paper-4elt")?.into_arc();
    let phi = QuandleMap::from_one_based(x.clone(), x.clone(), &[2, 4, 2, 2])?;
    let mut quivers = Vec::new();
    for name in ["6^{0,1}_1", "8_1"] {
        let d = catalog.get(name)?.diagram();
        let q = build_quiver(d, &x, std::slice::from_ref(&phi))?;
        println!("{name}: {} colorings, polynomial {}", count_colorings(d, &x), q.in_degree_polynomial());
        quivers.push(q);
    }
    println!("isomorphic: {}", are_isomorphic(&quivers[0], &quivers[1])?);
    Ok(())
}
