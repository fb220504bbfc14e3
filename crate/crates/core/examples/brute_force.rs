//! Exact unimodular degree on small ranks against the chain bound.

use udbound::search::{self, SearchOptions};
use udbound::{parse_diagram, OperatorContext};

fn main() -> udbound::Result<()> {
    for t in ["A1", "A2", "A3", "B2", "C2", "C3", "G2"] {
        let d = parse_diagram(t)?;
        let ctx = OperatorContext::new(d.cartan());
        let lb = search::ud_lower_bound(&ctx, &d, SearchOptions::default())?;
        let exact = search::brute_force_ud(&ctx, &d, Default::default())?;
        println!(
            "{t}: chain {} exact {} witness {} via {:?}",
            lb.bound, exact.ud, exact.witness.monomial, exact.witness.word
        );
    }
    Ok(())
}
