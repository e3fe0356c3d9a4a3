use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod render;

use commands::{Failure, Outcome};

/// Lifting properties of maps between finite topological spaces.
#[derive(Debug, Parser)]
#[command(name = "finlift", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the sweeps (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory holding the persistent lifting cache.
    #[arg(long, global = true, env = "FINLIFT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Largest space size in the universe of maps.
    #[arg(long, global = true, default_value_t = 4)]
    universe: usize,
    /// Permit universe bound 5 and larger enumerations (slow).
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a space or map literal and print its canonical form.
    Parse { literal: String },
    /// Decide whether `f` has the left lifting property with respect to `g`.
    Lift { f: String, g: String },
    /// Evaluate an orthogonal word over a seed class.
    Orth {
        /// Seed map literal (repeatable).
        #[arg(long = "seed", required = true)]
        seeds: Vec<String>,
        /// Word such as `r`, `ll` or `r,<5,l,r`.
        #[arg(long)]
        word: String,
        /// Test this map for membership instead of listing the class.
        #[arg(long)]
        check: Option<String>,
    },
    /// Count (and optionally list) spaces up to homeomorphism.
    Spaces {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        list: bool,
    },
    /// Run every catalogue property applicable to a map or space literal.
    Classify { literal: String },
    /// Sweep the catalogue and the suites over the universe.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Catalogue,
    Iterated,
    Urysohn,
    Ultrafilter,
    All,
}

pub struct Config {
    pub universe: usize,
    pub allow_large: bool,
    pub cache_dir: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--jobs: {e}")))?;
    }
    let cfg = Config {
        universe: cli.universe,
        allow_large: cli.allow_large,
        cache_dir: cli.cache_dir,
    };
    match cli.command {
        Command::Parse { literal } => commands::parse(&literal),
        Command::Lift { f, g } => commands::lift(&f, &g),
        Command::Orth { seeds, word, check } => commands::orth(&cfg, &seeds, &word, check.as_deref()),
        Command::Spaces { size, list } => commands::spaces(&cfg, size, list),
        Command::Classify { literal } => commands::classify(&cfg, &literal),
        Command::Verify { suite } => commands::verify(&cfg, suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", e.render());
            ExitCode::from(2)
        }
    }
}
