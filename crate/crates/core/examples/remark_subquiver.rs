//! Checks that a surface-link quiver embeds into the quivers of its resolutions.
//!
//! cargo run --example remark_subquiver

use quiverlink::quandle::{builtin, enumerate_endos};
use quiverlink::quiver::check_remark;
use quiverlink::Catalog;

fn main() -> quiverlink::Result<()> {
    let catalog = Catalog::builtin();
    let x = builtin("tetrahedral")?.into_arc();
    let endos = enumerate_endos(&x);
    for e in catalog.surface_links() {
        let r = check_remark(e.diagram(), &x, &endos)?;
        println!("{:<14} L+ {:?}  L- {:?}", e.name, r.plus, r.minus);
    }
    Ok(())
}
