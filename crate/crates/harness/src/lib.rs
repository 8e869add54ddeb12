//! Catalog-driven runner around `strange-core`: parses check catalogs,
//! runs them on a worker pool, caches results and renders reports.

pub mod catalog;
pub mod report;
pub mod runner;

pub use catalog::{parse_catalog, Catalog, Job, Mode, Overrides, DEFAULT_CATALOG};
pub use report::{emit_report, Format, RunReport, Status, Witness};
pub use runner::{run_job, run_suite, Cache, SuiteOptions};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("catalog line {line}, column {column}: {message}")]
    CatalogParse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
}

impl HarnessError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::CatalogParse { .. } | HarnessError::Usage(_) => 2,
            HarnessError::Io(..) => 1,
        }
    }
}

/// Exit code for a finished run: 1 if anything failed or errored.
pub fn exit_code(reports: &[RunReport]) -> i32 {
    if reports.iter().any(|r| r.status.is_failure()) {
        1
    } else {
        0
    }
}
