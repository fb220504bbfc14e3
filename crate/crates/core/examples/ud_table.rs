//! The bounds table for simply connected types up to rank 6.

use udbound::cli;

fn main() -> udbound::Result<()> {
    print!("{}", cli::table_text(&cli::cmd_table(6)?));
    Ok(())
}
