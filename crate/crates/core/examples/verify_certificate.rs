//! Checking user-supplied certificates.

use udbound::cli;

fn main() -> udbound::Result<()> {
    for (group, monomial, word) in [
        ("C3", "x1^5*x2^3*x3", "1,2,3,2,1,2,3,2,3"),
        ("C3", "x3", "2"),
        ("A2", "x1^2*x2", "1,2,1"),
    ] {
        let report = cli::cmd_verify(group, monomial, word)?;
        println!("{group} {monomial} [{word}]");
        print!("{}", report.to_text());
    }
    Ok(())
}
