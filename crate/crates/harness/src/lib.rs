//! Multi-seed experiment runner for PeSOA and the PSO/DE baselines:
//! mean ± standard deviation summaries, per-run convergence traces, and
//! parameter sweeps of the group count and group size.

mod algorithm;
mod error;
mod experiment;
mod report;
mod sweep;

pub use algorithm::{Algorithm, Overrides};
pub use error::{HarnessError, Result};
pub use experiment::{
    mean_and_std, run_experiment, summarize, ExperimentConfig, ExperimentOutcome, SummaryRow,
};
pub use report::{
    emit_reports, format_number, trace_file_name, ReportOptions, SUMMARY_CSV, SUMMARY_JSON,
};
pub use sweep::{
    describe_budget, parse_int_range, sweep_group_size, sweep_groups, write_sweep_csv,
    SweepParameter, SweepRow,
};
