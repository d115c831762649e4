//! Batch driver for the dual-sequence congruence checks: sweep
//! configuration, deterministic parallel execution, and machine-readable
//! reports.

pub mod config;
pub mod report;
pub mod runner;

pub use config::{Overrides, ReportFormat, RunError, SweepConfig};
pub use report::{emit, render};
pub use runner::{build_jobs, execute_job, expand_checks, run_sweep, summarize, Job, JobFamily, ReportRow, SweepSummary};
