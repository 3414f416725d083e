use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand};

use scrollfano::commands::{self, Format, H0Method};
use scrollfano::{threads_from_env, CliError, Exit, Outcome};
use scrollfano_core::census::{CensusMode, CensusQuery};

/// Exact invariants of split projective bundles and their log Fano pairs.
#[derive(Parser)]
#[command(name = "scrollfano", version)]
struct Cli {
    /// Print a description of the method to stderr.
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, Picard rank, anticanonical class and cones of a scroll.
    Info { variety: String },
    /// Number of sections of a line bundle.
    H0 {
        variety: String,
        class: String,
        #[arg(long, value_enum, default_value = "pushforward")]
        method: H0Method,
    },
    /// Forced components and singularities of the members of a linear system.
    Members { variety: String, class: String },
    /// Whether (X, D) is log Fano, with index and pseudoindex.
    Check { variety: String, boundary: String },
    /// Recompute the invariants of every known family for one r.
    Gallery {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        max_twist: i64,
    },
    /// Enumerate log Fano pairs of large index on scrolls.
    #[command(group(ArgGroup::new("mode").required(true).args(["index", "pseudoindex"])))]
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        index: Option<u64>,
        #[arg(long)]
        pseudoindex: Option<u64>,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        max_twist: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Skip the divisibility pre-filters.
        #[arg(long)]
        no_filters: bool,
    },
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Info { variety } => commands::info(&variety),
        Command::H0 {
            variety,
            class,
            method,
        } => commands::h0(&variety, &class, method),
        Command::Members { variety, class } => commands::members(&variety, &class),
        Command::Check { variety, boundary } => commands::check(&variety, &boundary),
        Command::Gallery { r, max_twist } => commands::gallery(r, max_twist),
        Command::Census {
            n,
            index,
            pseudoindex,
            max_twist,
            format,
            no_filters,
        } => {
            let mode = match (index, pseudoindex) {
                (Some(k), _) => CensusMode::IndexAtLeast(k),
                (_, Some(k)) => CensusMode::PseudoindexAtLeast(k),
                _ => unreachable!("clap requires one of the two"),
            };
            let mut query =
                CensusQuery::new(n, mode, max_twist).map_err(|e| CliError::Usage(e.to_string()))?;
            query.apply_filters = !no_filters;
            commands::census(&query, format, threads_from_env()?)
        }
    }
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Info { .. } => "info",
        Command::H0 { .. } => "h0",
        Command::Members { .. } => "members",
        Command::Check { .. } => "check",
        Command::Gallery { .. } => "gallery",
        Command::Census { .. } => "census",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.explain {
        eprintln!("{}", commands::explain(name(&cli.command)));
    }
    let start = Instant::now();
    match run(cli.command) {
        Ok(mut outcome) => {
            outcome.document.timing_ms = start.elapsed().as_millis().to_string();
            let mut stdout = std::io::stdout().lock();
            let body = match outcome.text {
                Some(text) => text,
                None => {
                    let mut s =
                        serde_json::to_string_pretty(&outcome.document).expect("serializable");
                    s.push('\n');
                    s
                }
            };
            // A closed pipe is not a verdict.
            let _ = stdout.write_all(body.as_bytes());
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Exit::Usage as u8)
        }
    }
}
