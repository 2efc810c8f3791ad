//! `berge`: batch front end for berge-core.
//!
//! Exit codes: 0 success or pass, 1 a counterexample or failed claim,
//! 2 usage or input error, 3 solver budget exhausted.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use input::Span;

#[derive(Parser, Debug)]
#[command(name = "berge", version, about = "Long cycles in bipartite graphs and Berge cycles in hypergraphs")]
struct Cli {
    /// Print reports as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Verbosity; `-vv` logs every examined graph in verify and hunt.
    #[arg(short, action = clap::ArgAction::Count, global = true)]
    v: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an extremal construction.
    #[command(subcommand)]
    Gen(Gen),
    /// Convert between a hypergraph (.hg) and its incidence graph (.bg).
    Transform {
        input: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Vertex connectivity; with --k, exit 1 unless the graph is k-connected.
    Conn {
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// A largest fan from an off-cycle X-vertex to a cycle.
    Fan {
        input: PathBuf,
        /// Apex X-index.
        #[arg(long)]
        x: usize,
        /// Cycle as a vertex list, e.g. "x0 y0 x1 y1".
        #[arg(long)]
        cycle: String,
    },
    /// Exact longest cycle.
    Longest {
        input: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Decide whether a cycle through every X-vertex exists; exit 1 if not.
    Ham {
        input: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Cycle-surgery local search for a long cycle.
    Improve {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum rounds.
        #[arg(long, default_value_t = 2_000)]
        rounds: u64,
        /// JSON-lines trace of accepted steps.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Best triple, segment configuration types and abundance on a cycle.
    Classify {
        input: PathBuf,
        #[arg(long)]
        cycle: String,
    },
    /// Exhaustive (or, above the size limit, sampled) predicate verification.
    Verify(VerifyArgs),
    /// Randomized counterexample search.
    Hunt(HuntArgs),
    /// Build the one-edge-over instance and report whether it is a witness.
    Sharpness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// G_k(n_1, ..., n_{k+1}; δ).
    Gk {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        delta: usize,
        /// Graph path; the certificate goes to `<path>.cert.json`.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// The hypergraph without a Berge hamiltonian cycle on `n` vertices.
    Con4 {
        #[arg(long)]
        n: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Budget {
    /// Search-node budget for exact solvers.
    #[arg(long, default_value_t = berge_core::search::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct Predicate {
    /// three_conn_quarter, two_conn_third, k_conn_general or long_cycle.
    #[arg(long)]
    predicate: String,
    /// Connectivity for k_conn_general.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `n` or an inclusive range `a..b`.
    #[arg(long)]
    n: Span,
    #[arg(long)]
    m: Span,
    /// Minimum X-degree of the class; defaults to `n`.
    #[arg(long)]
    delta: Option<usize>,
    #[command(flatten)]
    predicate: Predicate,
    #[command(flatten)]
    budget: Budget,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Progress file; finished shards listed there are skipped.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Where undecided graphs are queued.
    #[arg(long)]
    retry: Option<PathBuf>,
    #[arg(long)]
    log: Option<PathBuf>,
    /// Samples per block when a block is too large to enumerate.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Report path (JSON).
    #[arg(short)]
    o: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct HuntArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Span,
    #[arg(long)]
    delta: usize,
    #[command(flatten)]
    predicate: Predicate,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[command(flatten)]
    budget: Budget,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    log: Option<PathBuf>,
    #[arg(short)]
    o: Option<PathBuf>,
}

/// Outcome of a successful run, mapped to the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    Found,
    Budget,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<berge_core::Error>() {
        Some(berge_core::Error::BudgetExceeded { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Found) => ExitCode::from(1),
        Ok(Status::Budget) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
