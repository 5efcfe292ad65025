//! `gopmap`: exact analysis of endofunction dynamics on finite ordered sets.
//!
//! One binary, subcommand per operation. Exit codes: 0 success, 1 domain
//! error (e.g. a size guard refused without --force), 2 usage error
//! (unknown flags, malformed literals — parse errors carry a byte position).

mod commands;
mod output;
mod verify;

use clap::{Parser, Subcommand};

use commands::SweepArgs;
use gopmap::Error;
use output::OutFormat;

#[derive(Parser)]
#[command(
    name = "gopmap",
    version,
    about = "Exact orbit-pattern analysis of functions on finite ordered sets",
    after_help = "Function literals look like 11:6,3,2,5,8,10,9,4,7,6,5 and pattern \
                  literals like [2,2,1,3]@11 (with [2~3,1]@8 as repetition shorthand). \
                  GOPMAP_JOBS sets the default worker count."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a function into components, cycles, and basins
    Analyze {
        /// Function literal, e.g. 11:6,3,2,5,8,10,9,4,7,6,5
        function: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Print the global orbit pattern of a function
    Gop {
        /// Function literal
        function: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Print the rank of a function (a bijection onto 1..=n^n)
    Rank {
        /// Function literal
        function: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Reconstruct the function with a given rank
    Unrank {
        /// Domain size
        #[arg(long)]
        n: usize,
        /// Rank in 1..=n^n (decimal, any size)
        #[arg(long)]
        rank: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Print the minimal-rank function of a pattern class and its rank
    Threshold {
        /// Pattern literal, e.g. [2,2,1,3]@11
        gop: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// List every pattern on n points in pseudo-decimal order
    Order {
        /// Domain size (2^n - 1 rows; guarded above 20)
        #[arg(long)]
        n: usize,
        /// Override the row-count guard
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Closed-formula class size of a pattern
    Count {
        /// Pattern literal, e.g. [2,2,1,3]@11
        gop: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Exhaustive census of all n^n functions, optionally filtered
    Enumerate {
        /// Domain size (guarded above 10; see --force)
        #[arg(long)]
        n: usize,
        /// Restrict to a rigid set: rigid:<alphas>:<q>, e.g. rigid:1:1
        #[arg(long)]
        filter: Option<String>,
        /// Worker threads (default: GOPMAP_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Contiguous index chunks (default: the job count)
        #[arg(long)]
        partitions: Option<usize>,
        /// Override the domain-size guard
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Enumerate a locally rigid set with pruned search
    Rigid {
        /// Domain size (guarded above 16; see --force)
        #[arg(long)]
        n: usize,
        /// Comma-separated weights, e.g. 20,9,5,2,1
        #[arg(long)]
        alphas: String,
        /// Variation threshold
        #[arg(long)]
        q: u64,
        /// Worker threads (default: GOPMAP_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Override the domain-size guard
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Discretize a map onto a grid and report its orbit structure
    Discretize {
        /// Map: logistic or tent
        #[arg(long)]
        map: String,
        /// Tent exponent in [1, 2] (tent only; default 1)
        #[arg(long)]
        ell: Option<f64>,
        /// Grid size
        #[arg(long)]
        n: usize,
        /// Grid divisor: n or n-1
        #[arg(long, default_value = "n-1")]
        denominator: String,
        /// Rounding: floor, half-up, or half-down
        #[arg(long, default_value = "floor")]
        rounding: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Double-precision cycle experiment from pseudo-random seeds
    Dpcycle {
        /// Map: logistic or tent
        #[arg(long, default_value = "logistic")]
        map: String,
        /// Tent exponent in [1, 2] (tent only; default 1)
        #[arg(long)]
        ell: Option<f64>,
        /// Number of random seeds
        #[arg(long, default_value_t = 1000)]
        seeds: usize,
        /// RNG seed (fixed seed => identical output)
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        /// Worker threads (default: GOPMAP_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        out: OutFormat,
    },
    /// Re-run a cross-check suite and print a pass/fail report
    Verify {
        /// Which suite to run
        #[arg(long, value_enum)]
        suite: verify::Suite,
        /// Largest domain size to check (defaults per suite)
        #[arg(long)]
        n_max: Option<usize>,
        /// Worker threads (default: GOPMAP_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Contiguous index chunks (default: the job count)
        #[arg(long)]
        partitions: Option<usize>,
        /// Override the engines' domain-size guards
        #[arg(long)]
        force: bool,
    },
}

fn resolve_jobs(flag: Option<usize>) -> gopmap::Result<usize> {
    if let Some(jobs) = flag {
        return Ok(jobs.max(1));
    }
    match std::env::var("GOPMAP_JOBS") {
        Ok(text) => text.trim().parse::<usize>().map(|j| j.max(1)).map_err(|e| Error::Parse {
            at: 0,
            msg: format!("GOPMAP_JOBS={text:?} is not a worker count: {e}"),
        }),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |p| p.get())),
    }
}

fn run(cli: Cli) -> gopmap::Result<i32> {
    match cli.command {
        Command::Analyze { function, out } => commands::analyze(&function, out).map(|()| 0),
        Command::Gop { function, out } => commands::gop(&function, out).map(|()| 0),
        Command::Rank { function, out } => commands::rank_cmd(&function, out).map(|()| 0),
        Command::Unrank { n, rank, out } => commands::unrank_cmd(n, &rank, out).map(|()| 0),
        Command::Threshold { gop, out } => commands::threshold_cmd(&gop, out).map(|()| 0),
        Command::Order { n, force, out } => commands::order(n, force, out).map(|()| 0),
        Command::Count { gop, out } => commands::count(&gop, out).map(|()| 0),
        Command::Enumerate { n, filter, jobs, partitions, force, out } => {
            let sweep = SweepArgs { jobs: resolve_jobs(jobs)?, partitions, force, progress: true };
            commands::enumerate(n, filter.as_deref(), &sweep, out).map(|()| 0)
        }
        Command::Rigid { n, alphas, q, jobs, force, out } => {
            let sweep =
                SweepArgs { jobs: resolve_jobs(jobs)?, partitions: None, force, progress: true };
            commands::rigid(n, &alphas, q, &sweep, out).map(|()| 0)
        }
        Command::Discretize { map, ell, n, denominator, rounding, out } => {
            commands::discretize_cmd(&map, ell, n, &denominator, &rounding, out).map(|()| 0)
        }
        Command::Dpcycle { map, ell, seeds, rng_seed, jobs, out } => {
            let jobs = resolve_jobs(jobs)?;
            commands::dpcycle(&map, ell, seeds, rng_seed, jobs, out).map(|()| 0)
        }
        Command::Verify { suite, n_max, jobs, partitions, force } => {
            let sweep = SweepArgs { jobs: resolve_jobs(jobs)?, partitions, force, progress: false };
            verify::run(suite, n_max, &sweep)
        }
    }
}

fn main() {
    // Die quietly when a pipe downstream closes early (e.g. `gopmap order | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } => 2,
                _ => 1,
            }
        }
    };
    std::process::exit(code);
}
