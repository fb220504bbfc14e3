//! Half-spin and projective orthogonal quotients of D_n.

use udbound::cli::parse_group_spec;
use udbound::isogeny;

fn main() -> udbound::Result<()> {
    for n in [4, 6, 8] {
        for lattice in ["sc", "hs", "pgo"] {
            let spec = parse_group_spec(&format!("D{n}:{lattice}"))?;
            let b = isogeny::cd_upper_bound(&spec)?;
            println!("{spec}: cd <= {} (removed {:?})", b.bound, b.removed);
        }
    }
    Ok(())
}
