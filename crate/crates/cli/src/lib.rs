//! Command implementations behind the `scrollfano` binary. Every command
//! returns an [`Outcome`]: a JSON [`OutputDocument`], an exit status and,
//! for Markdown census output, the rendered table.

pub mod commands;
pub mod document;
pub mod markdown;

use rayon::prelude::*;
use scrollfano_core::census::{candidate_scrolls, finish, rows_for, CensusQuery, CensusRow};

pub use document::OutputDocument;

pub const THREADS_ENV: &str = "SCROLLFANO_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Negative = 1,
    Usage = 2,
    CrossCheck = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}", annotate(.input, .source))]
    Input {
        input: String,
        source: scrollfano_core::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn input(input: &str) -> impl FnOnce(scrollfano_core::Error) -> CliError + '_ {
        move |source| CliError::Input {
            input: input.to_string(),
            source,
        }
    }
}

/// Parse errors get a caret under the offending byte.
fn annotate(input: &str, err: &scrollfano_core::Error) -> String {
    match err {
        scrollfano_core::Error::Parse { position, .. } => {
            let col = input
                .char_indices()
                .take_while(|&(i, _)| i < *position)
                .count();
            format!("{err}\n  {input}\n  {}^", " ".repeat(col))
        }
        _ => format!("{err} (in `{input}`)"),
    }
}

pub struct Outcome {
    pub document: OutputDocument,
    pub exit: Exit,
    /// Replaces the JSON document on stdout when set.
    pub text: Option<String>,
}

/// Reads the thread cap from [`THREADS_ENV`]; `None` when unset.
pub fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got `{v}`"
            ))),
        },
    }
}

/// Parallel census over candidate scrolls. Rows are merged and sorted by
/// [`finish`], so the result does not depend on the thread count.
pub fn parallel_census(
    query: &CensusQuery,
    threads: Option<usize>,
) -> Result<Vec<CensusRow>, CliError> {
    query
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    let rows = pool.install(|| {
        candidate_scrolls(query)
            .par_iter()
            .flat_map_iter(|x| rows_for(query, x))
            .collect()
    });
    Ok(finish(query, rows))
}
