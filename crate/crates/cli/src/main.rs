use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod render;

/// Graph sums for S_n-equivariant Euler characteristics of moduli spaces
/// of curves and of stable maps to projective space.
#[derive(Parser, Debug)]
#[command(name = "eulergraph", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Print JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Directory for the coefficient cache (default: $EULERGRAPH_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Do not read or write the coefficient cache.
    #[arg(long, global = true, conflicts_with = "cache_dir")]
    pub no_cache: bool,

    /// Worker threads for parallel sums.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the conjugacy classes of the wreath product group of a valence profile.
    Classes {
        /// Valence profile such as `3^2,2^3` (valence^count).
        nu: String,
    },
    /// Print O(Θ), or the whole table for a profile.
    Otheta {
        /// A 2-partition such as `{[1,1]:[1,1,1], [1,1,1]:[1,1]}`.
        #[arg(required_unless_present = "all_for_nu", conflicts_with = "all_for_nu")]
        theta: Option<String>,
        #[arg(long, value_name = "NU")]
        all_for_nu: Option<String>,
        /// Count colored graphs for maps to P^r (needs --d).
        #[arg(long, requires = "d")]
        r: Option<u32>,
        #[arg(long, requires = "r")]
        d: Option<u32>,
    },
    /// Print the Pólya–Petersen character of a graph.
    Zeta {
        /// Graph file, e.g. `vertices: 2; edges: [(0,1),(1,1)]`, optionally
        /// with `colors:` and `weights:` fields.
        graph: PathBuf,
    },
    /// Contribution of a single stratum.
    Strata {
        graph: PathBuf,
        #[arg(long)]
        fixtures: PathBuf,
        #[arg(long, default_value_t = 0)]
        gmax: i64,
        #[arg(long, default_value_t = 0)]
        nmax: u32,
    },
    /// Compactify open-moduli Euler characteristics.
    Compactify {
        #[arg(long)]
        fixtures: PathBuf,
        #[arg(long, default_value_t = 0)]
        gmax: i64,
        #[arg(long, default_value_t = 0)]
        nmax: u32,
    },
    /// Euler characteristics of spaces of stable maps to P^r.
    Stablemaps {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        gmax: i64,
        #[arg(long, default_value_t = 0)]
        nmax: u32,
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Rows of Euler characteristics as r varies, with the interpolating polynomial.
    Table {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        gmax: i64,
        #[arg(long, default_value_t = 0)]
        nmax: u32,
        #[arg(long, default_value_t = 1)]
        rmin: u32,
        #[arg(long, default_value_t = 5)]
        rmax: u32,
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Validate a fixture file and print its Euler characteristics.
    Fixtures { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<String, String> {
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let g = &cli.global;
    match cli.command {
        Command::Classes { nu } => commands::classes(g, &nu),
        Command::Otheta {
            theta,
            all_for_nu,
            r,
            d,
        } => commands::otheta(g, theta.as_deref(), all_for_nu.as_deref(), r.zip(d)),
        Command::Zeta { graph } => commands::zeta(g, &graph),
        Command::Strata {
            graph,
            fixtures,
            gmax,
            nmax,
        } => commands::strata(g, &graph, &fixtures, gmax, nmax),
        Command::Compactify {
            fixtures,
            gmax,
            nmax,
        } => commands::compactify(g, &fixtures, gmax, nmax),
        Command::Stablemaps {
            r,
            d,
            gmax,
            nmax,
            fixtures,
        } => commands::stablemaps(g, r, d, gmax, nmax, fixtures.as_deref()),
        Command::Table {
            d,
            gmax,
            nmax,
            rmin,
            rmax,
            fixtures,
        } => commands::table(g, d, gmax, nmax, rmin, rmax, fixtures.as_deref()),
        Command::Fixtures { path } => commands::fixtures(g, &path),
    }
}
