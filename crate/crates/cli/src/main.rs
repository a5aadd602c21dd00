mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use symspring::fano::fano_multiplicities;
use symspring::ic_engine::{closed_form_f, closed_form_t, StalkSolver};
use symspring::springer_typec::{euler_table, kostka};
use symspring::{verify, Partition};

use report::{EulerReport, FanoReport, FtReport, KostkaReport, OrbitsReport, Render, StalksReport, VerifyReport};

#[derive(Parser)]
#[command(name = "symspring", version, about = "Orbits, IC stalks and Fano cohomology for (SL(2n+1), SO(2n+1))")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// All nilpotent orbits of rank n with their invariants
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// Stalk polynomials f_i and multiplicities T^i_j from the inductive solver
    Stalks {
        #[arg(long)]
        n: usize,
        /// Compare against the closed forms; exit 1 on mismatch
        #[arg(long)]
        check: bool,
    },
    /// Cohomology of the Fano variety of (i-1)-planes in P^{2n}
    Fano {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// Number of semistandard tableaux of a shape and content
    Kostka {
        /// Comma-separated descending parts, e.g. 2,1
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        weight: Partition,
    },
    /// Local Euler characteristics of the type-C order-two family
    Euler {
        #[arg(long)]
        n: usize,
    },
    /// Fourier-transform targets of the order-two IC sheaves
    FtTable {
        #[arg(long)]
        n: usize,
    },
    /// Run every identity suite for all ranks up to n-max
    Verify {
        #[arg(long)]
        n_max: usize,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<symspring::Error> for Failure {
    fn from(e: symspring::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit<R: Render>(r: &R, format: Format) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        Format::Tsv => r.tsv(),
        Format::Pretty => r.pretty(),
    };
    let mut out = std::io::stdout().lock();
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = out.write_all(text.as_bytes());
}

fn positive(name: &str, n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Orbits { n } => {
            positive("n", n)?;
            emit(&OrbitsReport::build(n)?, format);
        }
        Command::Stalks { n, check } => {
            positive("n", n)?;
            let mut solver = StalkSolver::<BigInt>::new();
            let (f, t) = solver.tables(n)?;
            let ok = check.then(|| {
                (0..=n).all(|i| {
                    closed_form_f(n, i).is_ok_and(|c| c == f.f[i])
                        && (0..=i).all(|j| closed_form_t(n, i, j).is_ok_and(|c| &c == t.get(i, j)))
                })
            });
            emit(&StalksReport::build(f, t, ok), format);
            if ok == Some(false) {
                return Err(Failure::Verification);
            }
        }
        Command::Fano { n, i } => {
            positive("n", n)?;
            emit(&FanoReport::build(&fano_multiplicities(n, i)?), format);
        }
        Command::Kostka { shape, weight } => {
            let k = kostka(&shape, &weight)?;
            emit(&KostkaReport { shape, weight, kostka: k }, format);
        }
        Command::Euler { n } => {
            positive("n", n)?;
            emit(&EulerReport(euler_table(n)?), format);
        }
        Command::FtTable { n } => {
            positive("n", n)?;
            emit(&FtReport::build(n)?, format);
        }
        Command::Verify { n_max } => {
            positive("n-max", n_max)?;
            let suites = verify::run_all(n_max);
            let passed = suites.iter().all(|s| s.passed());
            emit(&VerifyReport { n_max, passed, suites }, format);
            if !passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
