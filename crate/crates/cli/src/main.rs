use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wphodge::arith::DEFAULT_VISIT_LIMIT;
use wphodge::classify::EnumerationBounds;
use wphodge::{Error, Result};
use wphodge_cli::commands::{self, HypergeomInput, Suite, VerifyOptions};
use wphodge_cli::report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "wphodge",
    version,
    about = "Exact Hodge-theoretic computations for weighted projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit JSON (sorted keys, rationals as "p/q").
    #[arg(long, global = true, conflicts_with_all = ["csv", "text"])]
    json: bool,
    /// Emit CSV rows of (path, value).
    #[arg(long, global = true, conflicts_with = "text")]
    csv: bool,
    /// Emit indented plain text (the default).
    #[arg(long, global = true)]
    text: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Cap on candidate visits for brute-force searches.
    #[arg(long, global = true, env = "WPHODGE_LIMIT", default_value_t = DEFAULT_VISIT_LIMIT)]
    limit: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Ages, Hodge numbers, operators, lattice counts and quotient data for one tuple.
    Analyze {
        #[arg(required = true, allow_negative_numbers = true)]
        weights: Vec<String>,
    },
    /// Canonical weight tuples of a given dimension within bounds.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = EnumerationBounds::default().max_weight)]
        max_weight: u64,
        #[arg(long, default_value_t = EnumerationBounds::default().max_degree)]
        max_degree: u64,
    },
    /// Hodge vector from exponent multisets or from weights.
    Hypergeom {
        #[arg(allow_negative_numbers = true, conflicts_with_all = ["alpha", "beta"])]
        weights: Vec<String>,
        /// Comma-separated rationals in [0, 1), e.g. 0,1/2.
        #[arg(long, requires = "beta", allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, requires = "alpha", allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Cross-check suites over random samples and the reference tables.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Alternative table-1 reference file.
        #[arg(long, value_name = "PATH")]
        table1: Option<PathBuf>,
        /// Alternative table-2 reference file.
        #[arg(long, value_name = "PATH")]
        table2: Option<PathBuf>,
        /// Optional reference list of the quasismooth canonical tuples.
        #[arg(long, value_name = "PATH")]
        famous95: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_age_fault: bool,
    },
    /// Reproduce and check the additional nine weight tuples.
    Table1 {
        #[arg(long, value_name = "PATH")]
        golden: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        famous95: Option<PathBuf>,
    },
    /// Regenerate and check the quotient-presentation table.
    Table2 {
        #[arg(long, value_name = "PATH")]
        golden: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ages,
    Ehrhart,
    Tables,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Ages => Suite::Ages,
            SuiteArg::Ehrhart => Suite::Ehrhart,
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::All => Suite::All,
        }
    }
}

fn read(path: &Option<PathBuf>) -> Result<Option<String>> {
    path.as_deref()
        .map(|p: &Path| {
            fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        })
        .transpose()
}

fn run(cmd: &Command, limit: u64) -> Result<Report> {
    match cmd {
        Command::Analyze { weights } => {
            commands::analyze(&commands::parse_weights(weights)?, limit)
        }
        Command::Enumerate {
            dim,
            max_weight,
            max_degree,
        } => commands::enumerate(
            *dim,
            EnumerationBounds {
                max_weight: *max_weight,
                max_degree: *max_degree,
            },
            limit,
        ),
        Command::Hypergeom {
            weights,
            alpha,
            beta,
        } => {
            let input = match (alpha, beta) {
                (Some(a), Some(b)) => HypergeomInput::Params {
                    alphas: commands::parse_params(a)?,
                    betas: commands::parse_params(b)?,
                },
                _ => HypergeomInput::Weights(commands::parse_weights(weights)?),
            };
            commands::hypergeom(&input, limit)
        }
        Command::Verify {
            suite,
            samples,
            seed,
            table1,
            table2,
            famous95,
            inject_age_fault,
        } => commands::verify(&VerifyOptions {
            suite: (*suite).into(),
            samples: *samples,
            seed: *seed,
            limit,
            age_fault: *inject_age_fault,
            table1: read(table1)?,
            table2: read(table2)?,
            famous95: read(famous95)?,
        }),
        Command::Table1 { golden, famous95 } => {
            commands::table1(read(golden)?.as_deref(), read(famous95)?.as_deref(), limit)
        }
        Command::Table2 { golden } => commands::table2(read(golden)?.as_deref(), limit),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let format = if c.json {
        Format::Json
    } else if c.csv {
        Format::Csv
    } else {
        Format::Text
    };
    if c.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(c.jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli.command, c.limit) {
        Ok(report) => {
            let text = report.render(format);
            match &c.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("{}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{}", commands::error_object(&e));
            ExitCode::from(commands::error_exit_code(&e) as u8)
        }
    }
}
