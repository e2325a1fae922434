//! Builds diagrams from Morse words (caps, cups, crossings, marked vertices).
//!
//! cargo run --example morse_words

use quiverlink::diagram::{from_morse_word, serialize};

fn main() -> quiverlink::Result<()> {
    let trefoil = from_morse_word("trefoil", "C0 C2 X1 X1 X1 U0 U0")?;
    println!("trefoil: {} crossings, writhe {}", trefoil.crossing_count(), trefoil.writhe());
    print!("{}", serialize(&trefoil));

    // spun trefoil: a tangle, its mirror image, and a two-vertex neck
    let spun = from_morse_word("spun", "C0 C1 C2 C4 X1 X1 X1 Y5 Y5 Y5 M3 N3 U0 U0 U0 U0")?;
    println!("spun trefoil: ch-number {}", spun.ch_number());
    Ok(())
}
