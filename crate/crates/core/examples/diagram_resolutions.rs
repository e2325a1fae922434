//! Parses a marked graph diagram and inspects its two resolutions.
//!
//! cargo run --example diagram_resolutions

use quiverlink::diagram::{parse, serialize};
use quiverlink::Sign;

// two circles touching at two marked vertices: the unknotted torus
const TORUS: &str = "
diagram torus
m 1 2 3 4
m 3 2 1 4
";

fn main() -> quiverlink::Result<()> {
    let d = parse(TORUS)?;
    println!("{}: {} marked vertices, ch-number {}", d.name(), d.marked_count(), d.ch_number());
    for s in [Sign::Positive, Sign::Negative] {
        let r = d.resolve(s);
        println!("resolution {s:?}: {} component(s)", r.component_count()?);
        print!("{}", serialize(&r));
    }
    println!("admissibility: {:?}", d.admissibility_report().verdict);

    let broken = parse("diagram broken\nx+ 1 2 3 3\n");
    println!("a diagram with a reused edge is rejected: {}", broken.unwrap_err());
    Ok(())
}
