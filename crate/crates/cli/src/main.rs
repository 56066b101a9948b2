mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Build daisy cubes, count their induced subcubes and check the identities
/// between their counting polynomials.
#[derive(Parser, Debug)]
#[command(name = "daisy", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a daisy cube and write its vertex set.
    Build(BuildArgs),
    /// Count induced subcubes by dimension and distance from an anchor.
    Census(CensusArgs),
    /// Expand the generating functions f, g, h of a family.
    Series(SeriesArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
}

/// Where the graph comes from.
#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Named family: hypercube, fibonacci, lucas, vertex-deleted, bipartite-wheel, run-free.
    #[arg(long, requires = "n", conflicts_with_all = ["generators", "vertices"])]
    pub family: Option<String>,
    /// Word length for a named family.
    #[arg(long)]
    pub n: Option<usize>,
    /// Run length forbidden by the run-free family.
    #[arg(long)]
    pub k: Option<usize>,
    /// Generator file; closed downward and reduced to its maximal words on load.
    #[arg(long, value_name = "PATH", conflicts_with = "vertices")]
    pub generators: Option<std::path::PathBuf>,
    /// Vertex-set file taken as is (need not be downward closed).
    #[arg(long, value_name = "PATH")]
    pub vertices: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineArg {
    Oracle,
    Fast,
    Both,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[command(flatten)]
    pub input: Input,
    /// Anchor vertex as a 0/1 word; defaults to 0^n.
    #[arg(long)]
    pub anchor: Option<String>,
    /// Defaults to `both` for n <= 8 and `fast` otherwise.
    #[arg(long, value_enum)]
    pub engine: Option<EngineArg>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Output directory for census.csv and the C, D, W polynomial files.
    #[arg(long, value_name = "DIR")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// hypercube, lucas or fibonacci.
    #[arg(long)]
    pub family: String,
    /// Highest power of z to expand (at most 30).
    #[arg(long, default_value_t = 10)]
    pub m: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Full check matrix; only `paper` is defined.
    #[arg(long, conflicts_with = "check")]
    pub suite: Option<String>,
    /// A single check on the given input.
    #[arg(long)]
    pub check: Option<String>,
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub anchor: Option<String>,
    /// Largest n for the named families in the suite.
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    /// Seed for random generator sets.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random generator sets in the suite.
    #[arg(long, default_value_t = 100)]
    pub random: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,
}

fn configure_threads() {
    if let Some(threads) = std::env::var("DAISY_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if threads > 0 {
            // Fails only if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Build(args) => commands::build(&args),
        Command::Census(args) => commands::census(&args),
        Command::Series(args) => commands::series(&args),
        Command::Verify(args) => commands::verify(&args),
    };
    match result {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
