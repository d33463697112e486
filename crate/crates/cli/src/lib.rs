//! Command-line front end. [`run`] does all the work and returns the exit code
//! with captured output, so the binary is a thin wrapper and tests need no
//! subprocesses.

mod commands;
mod output;

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

pub use output::Format;

/// Exit code for a detected mathematical disagreement.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit code for invalid arguments.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Omega {
    Symbolic,
    Value(BigInt),
}

impl FromStr for Omega {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "symbolic" {
            return Ok(Self::Symbolic);
        }
        s.parse::<BigInt>()
            .map(Self::Value)
            .map_err(|_| format!("expected an integer or \"symbolic\", got {s:?}"))
    }
}

impl std::fmt::Display for Omega {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Symbolic => f.write_str("symbolic"),
            Self::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "pathinv", version, about = "Exact weighted Motzkin and Schröder path counts")]
pub struct Cli {
    /// Print the known table and formula misprints with their machine checks.
    #[arg(long, global = true)]
    typo_ledger: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a coefficient sequence.
    Seq(SeqArgs),
    /// Print a lower-triangular matrix row by row.
    Matrix(MatrixArgs),
    /// Evaluate a Hankel determinant and its closed form.
    Hankel(HankelArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SeqFamily {
    Motzkin,
    GrandMotzkin,
    WPath,
    SchroderCompressed,
    Delannoy,
    Banded,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BandFamily {
    Motzkin,
    Schroder,
    WPath,
}

#[derive(Args, Debug)]
struct SeqArgs {
    family: SeqFamily,
    /// Highest power of t to print.
    #[arg(short = 'N', long = "N", visible_alias = "n", default_value_t = 10)]
    n: usize,
    /// Band height: paths stay in 0 <= y < k.
    #[arg(long)]
    k: Option<usize>,
    /// Length of the horizontal step (default 1).
    #[arg(long)]
    w: Option<usize>,
    /// Final height.
    #[arg(long, default_value_t = 0)]
    j: usize,
    #[arg(long, default_value = "symbolic")]
    omega: Omega,
    /// Path family inside the band (for `banded`).
    #[arg(long = "family", id = "band_family", value_enum, default_value_t = BandFamily::Motzkin)]
    family_in_band: BandFamily,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MatrixKind {
    Motzkin,
    MotzkinInverse,
    Schroder,
    SchroderInverse,
    Grand,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    kind: MatrixKind,
    #[arg(short = 'n', long, visible_alias = "N", default_value_t = 5)]
    n: usize,
    #[arg(long, default_value = "symbolic")]
    omega: Omega,
}

#[derive(Args, Debug)]
struct HankelArgs {
    /// Dimension of the determinant.
    #[arg(short = 'n', long, visible_alias = "N", default_value_t = 5)]
    n: usize,
    /// Index shift s in det(M_{i+j+s}); 1 and 2 take no alpha or beta.
    #[arg(long, default_value_t = 0)]
    shift: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<BigInt>,
    #[arg(long, default_value = "symbolic")]
    omega: Omega,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Lemma,
    Orthogonality,
    BandedRecursion,
    FirstReturn,
    Delannoy,
    Bridge,
    Gould,
    TheoremSchroeder,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    which: Suite,
    /// Bound on indices and truncation orders.
    #[arg(long, default_value_t = 10)]
    max: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(short = 'N', long = "N", visible_alias = "n")]
    n: Option<usize>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    let mut out = Outcome::ok(String::new());
    if cli.typo_ledger {
        out = commands::typo_ledger(cli.format);
    }
    let Some(command) = cli.command else {
        if cli.typo_ledger {
            return out;
        }
        return Outcome::usage("error: a subcommand or --typo-ledger is required\n");
    };
    let next = match command {
        Command::Seq(a) => commands::seq(&a, cli.format),
        Command::Matrix(a) => commands::matrix(&a, cli.format),
        Command::Hankel(a) => commands::hankel(&a, cli.format),
        Command::Verify(a) => commands::verify(&a, cli.format),
    };
    Outcome {
        code: out.code.max(next.code),
        stdout: out.stdout + &next.stdout,
        stderr: out.stderr + &next.stderr,
    }
}
