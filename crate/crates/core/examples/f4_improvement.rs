//! F4 with and without C-type steps.

use udbound::search::{self, SearchOptions};
use udbound::{parse_diagram, OperatorContext};

fn main() -> udbound::Result<()> {
    let d = parse_diagram("F4")?;
    let ctx = OperatorContext::new(d.cartan());
    for allow_ctype in [false, true] {
        let opts = SearchOptions { allow_ctype, ..SearchOptions::default() };
        let cert = search::chain_method_bound(&ctx, &d, opts)?;
        println!(
            "ctype={allow_ctype}: {} degree {}, cd <= {}",
            cert.monomial,
            cert.degree,
            d.positive_root_count() - cert.degree
        );
        for s in &cert.steps {
            println!("  {:?} {:?} strips x{}^{}", s.kind, s.path, s.target, s.exponent);
        }
    }
    Ok(())
}
