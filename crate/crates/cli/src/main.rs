use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use dirac_index::emit::{emit, Document, Emit, Format};
use dirac_index::lie::{build_root_datum, GroupId};
use dirac_index::springer::{springer_table_with, table_config, Family};
use dirac_index::{dirac, fixtures, su_n1, suites, Config, Error};

#[derive(Parser)]
#[command(name = "dirac", version, about = "Dirac index polynomials and Springer data for classical real groups")]
struct Cli {
    /// Rank cap for root-system enumeration.
    #[arg(long, global = true, env = "DIRAC_MAX_RANK")]
    max_rank: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Springer table for the classical equal-rank families.
    SpringerTable {
        /// Comma-separated list: su, so-odd, sp-real, sp-pq, so-even, so-star, or all.
        #[arg(long, default_value = "all")]
        families: String,
        /// Bound on p, q and n.
        #[arg(long, default_value_t = 5)]
        max: usize,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Index polynomial of the discrete series in one chamber.
    IndexPoly {
        /// Group, e.g. "SU(2,1)", "Sp(4,R)", "SO_e(2,3)".
        #[arg(long)]
        group: String,
        /// Chamber number; chambers are ordered by `wρ_g` descending.
        #[arg(long, default_value_t = 0)]
        chamber: usize,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Determinant character polynomial of SU(n,1), chamber i.
    CharPoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Also extract root linear factors.
        #[arg(long)]
        factor: bool,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Common root factors of the character and index polynomials of SU(n,1).
    Gcd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run a verification suite.
    Verify {
        /// One of sl2, translation, ind-eq-char, harmonic, su-n1, springer.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Re-render a JSON document produced by another subcommand.
    Emit {
        /// Path to the JSON input, or "-" for stdin.
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IllegalParams(_)
            | Error::IndexOutOfRange(_)
            | Error::UnknownSuite(_)
            | Error::UnsupportedFormat(_)
            | Error::UnsupportedFamily(_)
            | Error::Parse(_)
            | Error::DimensionMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn config(cli_rank: Option<usize>) -> Config {
    match cli_rank {
        Some(r) => Config::default().with_max_rank(r),
        None => Config::default(),
    }
}

#[derive(Serialize)]
struct FactoredPoly<'a> {
    poly: &'a dirac_index::poly::MultiPoly,
    factorization: su_n1::RootFactorization,
}

fn render<T: Emit + ?Sized>(obj: &T, format: &str) -> Result<String, Failure> {
    Ok(emit(obj, format.parse::<Format>()?)?)
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::SpringerTable { families, max, format } => {
            let fams = Family::parse(&families)?;
            if fams.is_empty() {
                return Err(Failure::Usage("no families selected".into()));
            }
            let cfg = match cli.max_rank {
                Some(r) => table_config().with_max_rank(r),
                None => table_config(),
            };
            let rows = springer_table_with(&fams, max, &cfg)?;
            Ok((render(&rows, &format)?, true))
        }
        Command::IndexPoly { group, chamber, format } => {
            let g: GroupId = group.parse()?;
            let d = build_root_datum(g, &config(cli.max_rank))?;
            let fams = fixtures::ds_families(&d)?;
            let fam = fams.get(chamber).ok_or_else(|| {
                Failure::Usage(format!("chamber {chamber} out of range: {g} has {} chambers", fams.len()))
            })?;
            let p = dirac::index_polynomial(fam, &d);
            Ok((render(&p, &format)?, true))
        }
        Command::CharPoly { n, i, factor, format } => {
            let p = su_n1::char_poly_det(n, i)?;
            if factor {
                let f = su_n1::root_factors(&p)?;
                let fmt: Format = format.parse()?;
                if fmt != Format::Json {
                    return Err(Failure::Usage("--factor is only available with --format json".into()));
                }
                let out = serde_json::to_string(&FactoredPoly { poly: &p, factorization: f })
                    .map_err(|e| Failure::Compute(e.to_string()))?;
                return Ok((out, true));
            }
            Ok((render(&p, &format)?, true))
        }
        Command::Gcd { n, i, format } => {
            let g = su_n1::gcd_with_index(n, i)?;
            Ok((render(&g, &format)?, true))
        }
        Command::Verify { suite, format } => {
            let report = suites::run_suite(&suite)?;
            let pass = report.all_pass;
            Ok((render(&report, &format)?, pass))
        }
        Command::Emit { input, format } => {
            let mut text = String::new();
            if input == "-" {
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Usage(e.to_string()))?;
            } else {
                text = std::fs::read_to_string(&input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
            }
            let doc = Document::from_json(&text)?;
            Ok((doc.emit(format.parse()?)?, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, pass)) => {
            if out.ends_with('\n') {
                print!("{out}");
            } else {
                println!("{out}");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
