//! The C-type tower on C_n, giving degree n^2.

use udbound::{parse_diagram, search, OperatorContext};

fn main() -> udbound::Result<()> {
    for n in 2..=6 {
        let d = parse_diagram(&format!("C{n}"))?;
        let ctx = OperatorContext::new(d.cartan());
        let report = search::c_tower_check(&ctx, &d.components[0])?;
        let degree = report.certificate.as_ref().map(|c| c.degree);
        println!("C{n}: checks {:?}, degree {degree:?}", report.checks);
    }
    Ok(())
}
