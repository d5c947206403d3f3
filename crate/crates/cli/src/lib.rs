//! Command-line front end of `qswrank`: graph generation, rankings,
//! convergence-time sweeps and degeneracy comparisons with JSON, CSV and
//! SVG output.

mod commands;
mod config;
mod output;

pub use commands::{execute, load_graph, Outcome};
pub use config::{family_from_args, Command, Format, GraphSource, RunConfig};
pub use output::{compare_csv, compare_json, rank_csv, rank_json, sweep_csv, sweep_json, sweep_svg, CompareRow, SCHEMA_VERSION};

/// Failure of a CLI run.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qswrank::Error),
    #[error("{path}: {source}")]
    Graph { path: String, source: qswrank::Error },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}
