use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use pesoa::Budget;

use crate::algorithm::Algorithm;
use crate::error::{HarnessError, Result};
use crate::experiment::{mean_and_std, run_experiment, ExperimentConfig};
use crate::report::format_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParameter {
    Groups,
    GroupSize,
}

impl SweepParameter {
    pub fn column(self) -> &'static str {
        match self {
            SweepParameter::Groups => "k",
            SweepParameter::GroupSize => "group_size",
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            SweepParameter::Groups => "sweep_groups.csv",
            SweepParameter::GroupSize => "sweep_group_size.csv",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: usize,
    pub mean_amelioration: f64,
    pub mean_wall_time_s: f64,
    /// Mean amelioration per second of optimizer wall time.
    pub performance_ratio: f64,
}

/// Parses `a..b` (inclusive), `a..b:step` or a comma separated list.
pub fn parse_int_range(spec: &str) -> Result<Vec<usize>> {
    let bad = || {
        HarnessError::Config(format!(
            "invalid range `{spec}` (expected a..b, a..b:step or a,b,c)"
        ))
    };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let values = if let Some((lo, rest)) = spec.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (num(hi)?, num(step)?),
            None => (num(rest)?, 1),
        };
        let lo = num(lo)?;
        if step == 0 || lo > hi {
            return Err(bad());
        }
        (lo..=hi).step_by(step).collect()
    } else {
        spec.split(',').map(num).collect::<Result<Vec<_>>>()?
    };
    if values.is_empty() {
        return Err(bad());
    }
    Ok(values)
}

/// Runs PeSOA with the number of groups set to each of `values`.
pub fn sweep_groups(base: &ExperimentConfig, values: &[usize]) -> Result<Vec<SweepRow>> {
    sweep(base, SweepParameter::Groups, values)
}

/// Runs PeSOA with the group size set to each of `values`.
pub fn sweep_group_size(base: &ExperimentConfig, values: &[usize]) -> Result<Vec<SweepRow>> {
    sweep(base, SweepParameter::GroupSize, values)
}

fn sweep(
    base: &ExperimentConfig,
    parameter: SweepParameter,
    values: &[usize],
) -> Result<Vec<SweepRow>> {
    values
        .iter()
        .map(|&value| {
            let mut config = base.clone();
            config.algorithm = Algorithm::Pesoa;
            match parameter {
                SweepParameter::Groups => config.overrides.groups = Some(value),
                SweepParameter::GroupSize => config.overrides.group_size = Some(value),
            }
            let outcome = run_experiment(&config)?;
            let amelioration: Vec<f64> = outcome.records.iter().map(|r| r.amelioration()).collect();
            let wall: Vec<f64> = outcome
                .records
                .iter()
                .map(|r| r.wall_time.as_secs_f64())
                .collect();
            let mean_amelioration = mean_and_std(&amelioration).0;
            let mean_wall_time_s = mean_and_std(&wall).0;
            Ok(SweepRow {
                value,
                mean_amelioration,
                mean_wall_time_s,
                performance_ratio: mean_amelioration / mean_wall_time_s,
            })
        })
        .collect()
}

pub fn describe_budget(budget: &Budget) -> String {
    let mut parts = Vec::new();
    if let Some(n) = budget.max_evaluations {
        parts.push(format!("max_evaluations={n}"));
    }
    if let Some(n) = budget.max_cycles {
        parts.push(format!("max_cycles={n}"));
    }
    if let Some(t) = budget.target_value {
        parts.push(format!("target_value={t}"));
    }
    parts.join(" ")
}

/// Writes the sweep table to `dir/<parameter file>`. Leading `#` lines
/// record the setup: benchmarks, seeds, budget and the timing source.
pub fn write_sweep_csv(
    dir: &Path,
    parameter: SweepParameter,
    base: &ExperimentConfig,
    rows: &[SweepRow],
) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    let mut out = String::new();
    writeln!(out, "# benchmarks: {}", base.benchmarks).unwrap();
    writeln!(out, "# seeds: {}", base.seeds.len()).unwrap();
    writeln!(out, "# budget: {}", describe_budget(&base.budget)).unwrap();
    writeln!(
        out,
        "# timing: optimizer wall time in seconds, used in place of CPU time"
    )
    .unwrap();
    writeln!(
        out,
        "# performance_ratio = mean_amelioration / mean_wall_time_s"
    )
    .unwrap();
    if let Some(best) = rows
        .iter()
        .filter(|r| r.performance_ratio.is_finite())
        .max_by(|a, b| a.performance_ratio.total_cmp(&b.performance_ratio))
    {
        writeln!(
            out,
            "# highest performance_ratio at {}={}",
            parameter.column(),
            best.value
        )
        .unwrap();
    }
    writeln!(
        out,
        "{},mean_amelioration,mean_wall_time_s,performance_ratio",
        parameter.column()
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            r.value,
            format_number(r.mean_amelioration),
            format_number(r.mean_wall_time_s),
            format_number(r.performance_ratio)
        )
        .unwrap();
    }
    let path = dir.join(parameter.file_name());
    fs::write(&path, out).map_err(|e| HarnessError::io(&path, e))?;
    Ok(path)
}
