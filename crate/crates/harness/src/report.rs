use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use pesoa::RunRecord64;
use serde::Serialize;

use crate::error::{HarnessError, Result};
use crate::experiment::SummaryRow;

pub const SUMMARY_CSV: &str = "summary.csv";
pub const SUMMARY_JSON: &str = "summary.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Write measured wall times. When off the timing column is left empty
    /// (`null` in JSON) so that repeated runs produce identical bytes.
    pub timing: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { timing: true }
    }
}

/// Plain decimal rendering used in every CSV cell.
pub fn format_number(x: f64) -> String {
    format!("{x}")
}

pub fn trace_file_name(record: &RunRecord64) -> String {
    format!(
        "trace_{}_{}_seed{}.csv",
        record.algorithm, record.benchmark, record.seed
    )
}

#[derive(Serialize)]
struct JsonRow<'a> {
    benchmark: &'a str,
    algorithm: &'a str,
    n_runs: usize,
    mean_best: f64,
    std_best: f64,
    mean_wall_time_s: Option<f64>,
}

/// Writes one trace CSV per record plus `summary.csv` and `summary.json`
/// into `dir` (created if missing). Returns the paths written.
pub fn emit_reports(
    records: &[RunRecord64],
    rows: &[SummaryRow],
    dir: &Path,
    options: ReportOptions,
) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    let mut written = Vec::with_capacity(records.len() + 2);

    for record in records {
        let mut csv = String::from("cycle,evaluations,best_value\n");
        for p in &record.trace {
            writeln!(
                csv,
                "{},{},{}",
                p.cycle,
                p.evaluations,
                format_number(p.best_value)
            )
            .unwrap();
        }
        written.push(write(dir.join(trace_file_name(record)), &csv)?);
    }

    let mut csv = String::from("benchmark,algorithm,n_runs,mean_best,std_best,mean_wall_time_s\n");
    for r in rows {
        let wall = if options.timing {
            format_number(r.mean_wall_time_s)
        } else {
            String::new()
        };
        writeln!(
            csv,
            "{},{},{},{},{},{}",
            r.benchmark,
            r.algorithm,
            r.n_runs,
            format_number(r.mean_best),
            format_number(r.std_best),
            wall
        )
        .unwrap();
    }
    written.push(write(dir.join(SUMMARY_CSV), &csv)?);

    let json_rows: Vec<JsonRow> = rows
        .iter()
        .map(|r| JsonRow {
            benchmark: &r.benchmark,
            algorithm: &r.algorithm,
            n_runs: r.n_runs,
            mean_best: r.mean_best,
            std_best: r.std_best,
            mean_wall_time_s: options.timing.then_some(r.mean_wall_time_s),
        })
        .collect();
    let mut json = serde_json::to_string_pretty(&json_rows).expect("summary rows serialize");
    json.push('\n');
    written.push(write(dir.join(SUMMARY_JSON), &json)?);
    Ok(written)
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf> {
    fs::write(&path, contents).map_err(|e| HarnessError::io(&path, e))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use std::time::Duration;

    use pesoa::TracePoint;

    use super::*;
    use crate::experiment::summarize;

    fn record() -> RunRecord64 {
        RunRecord64 {
            algorithm: "pesoa".into(),
            benchmark: "F07".into(),
            seed: 4,
            trace: vec![
                TracePoint {
                    cycle: 0,
                    evaluations: 200,
                    best_value: 1.5,
                },
                TracePoint {
                    cycle: 1,
                    evaluations: 900,
                    best_value: 0.25,
                },
            ],
            final_best_value: 0.25,
            final_best_position: vec![3.0, 2.0],
            wall_time: Duration::from_millis(12),
        }
    }

    #[test]
    fn one_record_three_files() {
        let dir = tempfile::tempdir().unwrap();
        let records = vec![record()];
        let paths = emit_reports(
            &records,
            &summarize(&records),
            dir.path(),
            ReportOptions::default(),
        )
        .unwrap();
        assert_eq!(paths.len(), 3);
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 3);

        let trace = fs::read_to_string(dir.path().join("trace_pesoa_F07_seed4.csv")).unwrap();
        assert_eq!(
            trace,
            "cycle,evaluations,best_value\n0,200,1.5\n1,900,0.25\n"
        );
        assert_eq!(trace.lines().count(), records[0].trace.len() + 1);

        let summary = fs::read_to_string(dir.path().join(SUMMARY_CSV)).unwrap();
        assert_eq!(
            summary,
            "benchmark,algorithm,n_runs,mean_best,std_best,mean_wall_time_s\nF07,pesoa,1,0.25,0,0.012\n"
        );
    }

    #[test]
    fn json_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let records = vec![
            record(),
            RunRecord64 {
                seed: 5,
                final_best_value: 0.75,
                ..record()
            },
        ];
        let rows = summarize(&records);
        emit_reports(&records, &rows, dir.path(), ReportOptions::default()).unwrap();
        let text = fs::read_to_string(dir.path().join(SUMMARY_JSON)).unwrap();
        let back: Vec<SummaryRow> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rows);
    }

    #[test]
    fn timing_can_be_omitted() {
        let dir = tempfile::tempdir().unwrap();
        let records = vec![record()];
        emit_reports(
            &records,
            &summarize(&records),
            dir.path(),
            ReportOptions { timing: false },
        )
        .unwrap();
        let summary = fs::read_to_string(dir.path().join(SUMMARY_CSV)).unwrap();
        assert!(summary.ends_with("F07,pesoa,1,0.25,0,\n"));
        let json: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(dir.path().join(SUMMARY_JSON)).unwrap())
                .unwrap();
        assert!(json[0]["mean_wall_time_s"].is_null());
    }

    #[test]
    fn io_errors_name_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "").unwrap();
        let err = emit_reports(
            &[record()],
            &[],
            &blocker.join("sub"),
            ReportOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("file"));
    }
}
