//! Bounds for adjoint E6 and E7 with every generating set considered.

use udbound::cli::parse_group_spec;
use udbound::isogeny;

fn main() -> udbound::Result<()> {
    for text in ["E6:adjoint", "E7:adjoint"] {
        let spec = parse_group_spec(text)?;
        let b = isogeny::cd_upper_bound(&spec)?;
        println!("{spec}: cd <= {} (z verified: {})", b.bound, b.z_verified);
        println!("  removed {:?}, subdiagram {}", b.removed, b.subdiagram);
        for line in b.substitution.describe() {
            println!("  {line}");
        }
        for alt in &b.alternatives {
            println!("  alternative {:?} ({}) ud >= {}", alt.removed, alt.subdiagram, alt.ud_lower_bound);
        }
    }
    Ok(())
}
