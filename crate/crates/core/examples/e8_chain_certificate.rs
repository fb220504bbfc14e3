//! Chain-method certificate for E8, with its step-by-step trace.

use udbound::search::{self, SearchOptions};
use udbound::{parse_diagram, OperatorContext};

fn main() -> udbound::Result<()> {
    let d = parse_diagram("E8")?;
    let ctx = OperatorContext::new(d.cartan());
    let cert = search::chain_method_bound(&ctx, &d, SearchOptions::default())?;
    println!("monomial {} (degree {})", cert.monomial, cert.degree);
    println!("word {:?}", cert.word);
    let v = search::verify_certificate(&ctx, &cert)?;
    for e in &v.trace {
        println!("step {}: {:?} -> {}", e.index, e.applied, e.after);
    }
    println!("valid: {}, cd(E8) <= {}", v.valid, d.positive_root_count() - cert.degree);
    Ok(())
}
