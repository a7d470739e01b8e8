//! Batch front-end for the verification suites: configuration parsing,
//! preset catalog, check execution, and report emission.

pub mod config;
pub mod presets;
pub mod report_io;
pub mod runner;

pub use config::RunConfig;
pub use runner::{exit_code, run, RunError, RunSummary};
