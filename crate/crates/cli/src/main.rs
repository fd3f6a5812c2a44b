mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations in finite rings and algebras over finite fields.
#[derive(Debug, Parser)]
#[command(name = "fqring", version)]
struct Cli {
    /// Emit canonical JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    /// Largest number of elements any single enumeration may visit
    /// (default: $FQRING_BUDGET, else 2^20).
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the spec file of a builtin ring.
    Make(MakeArgs),
    /// Print structural invariants of a spec file.
    Analyze {
        spec: PathBuf,
    },
    /// Run every applicable statement check.
    Verify {
        #[arg(required_unless_present = "catalog")]
        spec: Option<PathBuf>,
        /// Verify the builtin catalog instead of a spec file.
        #[arg(long, conflicts_with = "spec")]
        catalog: bool,
    },
    /// Classify all unital algebras of a small dimension.
    Census {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long)]
        dim: usize,
        /// Write the census result as JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solution densities of a builtin family across primes.
    Sweep {
        #[arg(long, value_enum, default_value = "S")]
        builtin: SweepFamily,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Builtin {
    #[value(name = "S")]
    S,
    Matrix,
    Triangular,
    Qring,
    Product,
    #[value(name = "Zm")]
    Zm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepFamily {
    #[value(name = "S")]
    S,
}

#[derive(Debug, Args)]
struct MakeArgs {
    #[arg(value_enum)]
    builtin: Builtin,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, default_value_t = 1)]
    k: u64,
    #[arg(long)]
    n: Option<usize>,
    /// Cyclic orders for `Zm`, comma separated.
    #[arg(long, value_delimiter = ',')]
    moduli: Vec<u64>,
    /// Spec files of the factors for `product`.
    #[arg(long)]
    left: Option<PathBuf>,
    #[arg(long)]
    right: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn configure(cli: &Cli) -> anyhow::Result<()> {
    let budget = match cli.budget {
        Some(b) => Some(b),
        None => match std::env::var("FQRING_BUDGET") {
            Ok(v) => Some(v.trim().parse().map_err(|_| anyhow::anyhow!("FQRING_BUDGET is not a number: {v}"))?),
            Err(_) => None,
        },
    };
    if let Some(b) = budget {
        fqring::budget::set_enumeration_budget(b);
    }
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure(&cli).and_then(|()| commands::run(&cli));
    match result {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
