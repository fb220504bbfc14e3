//! Weyl group sizes, length distributions and longest elements.

use udbound::{parse_diagram, weyl, OperatorContext};

fn main() -> udbound::Result<()> {
    for t in ["A3", "B3", "G2", "D4", "F4"] {
        let ctx = OperatorContext::new(parse_diagram(t)?.cartan());
        let g = weyl::enumerate(&ctx, None, weyl::DEFAULT_GROUP_CAP)?;
        let counts: Vec<usize> = (0..=g.max_length()).map(|l| g.of_length(l).len()).collect();
        println!("{t}: |W| = {}, by length {counts:?}", g.len());
        if let Some(w0) = g.longest() {
            println!("  longest {:?}", w0.word);
        }
    }
    Ok(())
}
