use std::path::PathBuf;

use pesoa::benchmarks::{resolve_list, BenchmarkEntry};
use pesoa::{Budget, RunRecord64};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithm::{Algorithm, Overrides};
use crate::error::{HarnessError, Result};

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    /// Benchmark ids or aliases, or `all`.
    pub benchmarks: String,
    pub seeds: Vec<u64>,
    pub budget: Budget,
    pub overrides: Overrides,
    pub output_dir: Option<PathBuf>,
    /// Run the (benchmark, seed) jobs on the rayon pool.
    pub parallel: bool,
}

impl ExperimentConfig {
    pub fn new(algorithm: Algorithm, benchmarks: impl Into<String>) -> Self {
        Self {
            algorithm,
            benchmarks: benchmarks.into(),
            seeds: (0..10).collect(),
            budget: Budget::evaluations(200_000),
            overrides: Overrides::default(),
            output_dir: None,
            parallel: true,
        }
    }

    /// `count` consecutive seeds starting at `base`.
    pub fn with_seeds(mut self, base: u64, count: u64) -> Self {
        self.seeds = (base..base + count).collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(HarnessError::Config("at least one seed is required".into()));
        }
        let mut sorted = self.seeds.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(HarnessError::Config("seeds must be distinct".into()));
        }
        self.budget.validate()?;
        self.overrides.validate(self.algorithm)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub benchmark: String,
    pub algorithm: String,
    pub n_runs: usize,
    pub mean_best: f64,
    pub std_best: f64,
    pub mean_wall_time_s: f64,
}

#[derive(Debug, Clone)]
pub struct ExperimentOutcome {
    /// Ordered by benchmark (as requested), then seed.
    pub records: Vec<RunRecord64>,
    pub rows: Vec<SummaryRow>,
}

/// Runs every (benchmark, seed) pair and summarizes per benchmark. The
/// records' `benchmark` field carries the registry id.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let entries: Vec<BenchmarkEntry<f64>> = resolve_list(&config.benchmarks)?;
    let mut seeds = config.seeds.clone();
    seeds.sort_unstable();
    let jobs: Vec<(&BenchmarkEntry<f64>, u64)> = entries
        .iter()
        .flat_map(|e| seeds.iter().map(move |&s| (e, s)))
        .collect();

    let run = |&(entry, seed): &(&BenchmarkEntry<f64>, u64)| -> Result<RunRecord64> {
        let mut record =
            config
                .overrides
                .run(config.algorithm, &entry.problem, &config.budget, seed)?;
        record.benchmark = entry.id.to_string();
        Ok(record)
    };
    let records = if config.parallel {
        jobs.par_iter().map(run).collect::<Result<Vec<_>>>()?
    } else {
        jobs.iter().map(run).collect::<Result<Vec<_>>>()?
    };

    let rows = summarize(&records);
    Ok(ExperimentOutcome { records, rows })
}

/// One row per (benchmark, algorithm), in order of first appearance.
/// Statistics are taken over the runs sorted by seed.
pub fn summarize(records: &[RunRecord64]) -> Vec<SummaryRow> {
    let mut keys: Vec<(&str, &str)> = Vec::new();
    for r in records {
        let key = (r.benchmark.as_str(), r.algorithm.as_str());
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    keys.into_iter()
        .map(|(benchmark, algorithm)| {
            let mut runs: Vec<&RunRecord64> = records
                .iter()
                .filter(|r| r.benchmark == benchmark && r.algorithm == algorithm)
                .collect();
            runs.sort_by_key(|r| r.seed);
            let best: Vec<f64> = runs.iter().map(|r| r.final_best_value).collect();
            let (mean_best, std_best) = mean_and_std(&best);
            let wall: Vec<f64> = runs.iter().map(|r| r.wall_time.as_secs_f64()).collect();
            SummaryRow {
                benchmark: benchmark.to_string(),
                algorithm: algorithm.to_string(),
                n_runs: runs.len(),
                mean_best,
                std_best,
                mean_wall_time_s: mean_and_std(&wall).0,
            }
        })
        .collect()
}

/// Mean and sample standard deviation (n - 1 denominator; 0 for a single
/// value).
pub fn mean_and_std(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
    (mean, (ss / (n - 1) as f64).sqrt())
}
