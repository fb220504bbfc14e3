//! Diagonal quotients G^m / Z by the product formula.

use udbound::isogeny;
use udbound::root_system::{Family, SimpleType};

fn main() -> udbound::Result<()> {
    for (f, n) in [(Family::E, 6), (Family::E, 7), (Family::A, 3)] {
        let ty = SimpleType::new(f, n)?;
        for m in 1..=3 {
            let q = isogeny::product_quotient_bound(ty, m, None)?;
            println!(
                "{}: cd <= {} (ud {} full, {} after removing {:?})",
                q.cd.spec, q.bound, q.ud_full, q.ud_sub, q.removed
            );
        }
    }
    Ok(())
}
