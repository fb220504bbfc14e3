//! Schubert-basis coefficients of a monomial on B3.

use udbound::cli;

fn main() -> udbound::Result<()> {
    for poly in ["x1^2*x2", "x3^3", "x1*x2*x3"] {
        println!("{poly}:");
        for term in cli::cmd_schubert("B3", poly, cli::group_cap())? {
            println!("  {} * {:?}", term.coefficient, term.word);
        }
    }
    Ok(())
}
