use std::process::ExitCode;

use clap::{Parser, Subcommand};
use udbound::cli::{self, EXIT_OK, EXIT_UNVERIFIED};
use udbound::Error;

#[derive(Parser)]
#[command(name = "udbound", version, about = "Unimodular-degree certificates and canonical-dimension bounds")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper bound for cd of a group, e.g. E8, E6:adjoint, D8:hs, E6^2/mu3.
    Bound {
        spec: String,
        #[arg(long)]
        json: bool,
        /// Only 1-chain steps.
        #[arg(long)]
        no_ctype: bool,
    },
    /// Lower bounds for ud and upper bounds for cd of simply connected groups.
    Table {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a certificate `d_word(monomial) = 1`.
    Verify {
        spec: String,
        #[arg(long)]
        monomial: String,
        /// Comma-separated vertex indices, leftmost applied last.
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Exact ud by exhaustive search.
    Brute {
        spec: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of a homogeneous polynomial in the Schubert basis.
    Schubert {
        spec: String,
        #[arg(long)]
        poly: String,
    },
    /// Randomized property checks.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
    },
}

fn run(command: Command) -> Result<i32, Error> {
    let verified_code = |ok: bool| if ok { EXIT_OK } else { EXIT_UNVERIFIED };
    match command {
        Command::Bound { spec, json, no_ctype } => {
            let doc = cli::cmd_bound(&spec, !no_ctype)?;
            if json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            Ok(verified_code(doc.verified))
        }
        Command::Table { max_rank, json } => {
            let rows = cli::cmd_table(max_rank)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
            } else {
                print!("{}", cli::table_text(&rows));
            }
            Ok(EXIT_OK)
        }
        Command::Verify { spec, monomial, word, json } => {
            let r = cli::cmd_verify(&spec, &monomial, &word)?;
            if json {
                println!("{}", r.document.to_json());
            } else {
                print!("{}", r.to_text());
            }
            Ok(verified_code(r.document.verified))
        }
        Command::Brute { spec, max_degree, json } => {
            let doc = cli::cmd_brute(&spec, max_degree, cli::group_cap())?;
            if json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            Ok(verified_code(doc.verified))
        }
        Command::Schubert { spec, poly } => {
            let terms = cli::cmd_schubert(&spec, &poly, cli::group_cap())?;
            for t in &terms {
                let w: Vec<String> = t.word.iter().map(|v| v.to_string()).collect();
                println!("{:>8}  [{}]", t.coefficient, w.join(","));
            }
            if terms.is_empty() {
                println!("0");
            }
            Ok(EXIT_OK)
        }
        Command::Check { seed, cases } => {
            let reports = cli::cmd_check(seed, cases);
            let mut ok = true;
            for r in &reports {
                println!(
                    "{} {} ({} cases)",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.cases
                );
                for f in &r.failures {
                    println!("    {f}");
                }
                ok &= r.passed();
            }
            Ok(verified_code(ok))
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let code = match run(args.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            cli::exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
