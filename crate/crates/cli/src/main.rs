mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kzmc_core::ErrorKind;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  usage error (bad flags, unreadable input file)
  2  parse error in a system, family or rational
  3  contract violation (non-integrable input, wrong dimensions, degenerate μ, ...)
  4  theorem violation (a prediction disagreed with direct computation)";

#[derive(Parser, Debug)]
#[command(name = "kzmc", version, about = "Exact tournament families, KZ-type systems and middle convolution", after_help = EXIT_CODES)]
pub struct Cli {
    /// Worker threads for per-family work (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of tournament counts for 1..=n-max teams.
    Counts {
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// All maximal commuting families on labels 0..n-1.
    Families {
        #[arg(long)]
        n: u32,
        /// Keep only families containing every listed set, e.g. "{0,1};{2,3}".
        #[arg(long)]
        contains: Option<String>,
        /// Omit the full set from each line.
        #[arg(long)]
        shortened: bool,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Validate a system and report integrability violations.
    Check(InputArgs),
    /// Joint spectra of the system for every family.
    Spectra {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        shortened: bool,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Middle convolution in one variable; prints the resulting system.
    Mc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value_t = 0)]
        var: u32,
    },
    /// Check every predicted spectrum of the middle convolution against direct computation.
    VerifyMc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Blow-up chart of a family.
    Blowup(BlowupArgs),
    /// Draw a family as a bracket.
    Render {
        #[arg(long)]
        family: String,
        /// Number of labels (default: inferred from the family).
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        winner: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Seeded random integrable system.
    Gen {
        #[arg(long, value_enum, default_value_t = GenKind::Rank1)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Convolutions in the tower.
        #[arg(long, default_value_t = 2)]
        steps: usize,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
    },
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// System JSON: a file path, `-` for stdin, or inline JSON.
    #[arg(long)]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct BlowupArgs {
    #[arg(long)]
    pub family: String,
    /// Number of labels (default: inferred from the family, or from --input).
    #[arg(long)]
    pub n: Option<u32>,
    /// System whose residues are attached to the chart divisors.
    #[arg(long)]
    pub input: Option<String>,
    /// Members whose coordinate is negated, e.g. "{2,3}".
    #[arg(long)]
    pub flip: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tex,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Rank1,
    McTower,
}

/// A failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(kzmc_core::Error),
    /// Output was written; some check failed.
    Violations(usize),
}

impl From<kzmc_core::Error> for Failure {
    fn from(e: kzmc_core::Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start {jobs} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    let mut out = String::new();
    let result = commands::run(&cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Contract => 3,
                ErrorKind::TheoremViolation => 4,
            })
        }
        Err(Failure::Violations(k)) => {
            eprintln!("{k} check(s) failed");
            ExitCode::from(4)
        }
    }
}
