//! Catalog ingestion, verification sweeps and report generation on top of
//! `factorspec-core`. The `factorspec` binary is a thin wrapper around [`cli`].

pub mod catalog;
pub mod cli;
mod error;
pub mod mine;
pub mod report;
pub mod suite;
pub mod verify;

pub use catalog::{open_graph6, read_graph6_file, read_graph6_str, stream_graph6, Graph6Stream};
pub use error::{Error, Result};
pub use mine::{mine_extremal, MineParams, MineReport};
pub use suite::{equivalence_suite, run_suite, Mismatch, SuiteKind, SuiteReport};

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "FACTORSPEC_WORKERS";

/// Builds the sweep pool, honouring `FACTORSPEC_WORKERS` when it holds a
/// positive integer. Results never depend on the pool size.
pub fn worker_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(WORKERS_ENV) {
        let workers: usize = raw.trim().parse().ok().filter(|&w| w > 0).ok_or_else(|| {
            Error::Input(format!(
                "{WORKERS_ENV} must be a positive integer, got {raw:?}"
            ))
        })?;
        builder = builder.num_threads(workers);
    }
    builder
        .build()
        .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))
}
