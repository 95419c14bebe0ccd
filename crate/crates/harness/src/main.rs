use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pesoa::pesoa::MigrationPolicy;
use pesoa::Budget;
use pesoa_harness::{
    describe_budget, emit_reports, parse_int_range, run_experiment, sweep_group_size, sweep_groups,
    write_sweep_csv, Algorithm, ExperimentConfig, Overrides, ReportOptions, Result, SweepParameter,
};

#[derive(Parser)]
#[command(
    name = "pesoa",
    version,
    about = "Penguin search optimization experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm over benchmarks and seeds; write traces and summaries.
    Run {
        #[arg(long, default_value = "pesoa")]
        algo: String,
        #[command(flatten)]
        common: Common,
        /// Leave the wall time column empty so output is byte reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Sweep the number of groups, e.g. `--k 2..50` or `--k 2,5,10,20,50`.
    SweepGroups {
        #[arg(long, default_value = "2,5,10,20,50")]
        k: String,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep the group size, e.g. `--sizes 5..100:5`.
    SweepSize {
        #[arg(long, default_value = "5..100:5")]
        sizes: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Benchmark ids or aliases, comma separated, or `all`.
    #[arg(
        long,
        default_value = "ackley,sphere,rastrigin10,rosenbrock10,griewank10"
    )]
    bench: String,
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_base: u64,
    #[arg(long, default_value_t = 200_000)]
    max_evals: u64,
    #[arg(long)]
    max_cycles: Option<u64>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    groups: Option<usize>,
    #[arg(long)]
    group_size: Option<usize>,
    #[arg(long)]
    max_dist: Option<f64>,
    #[arg(long)]
    max_dives: Option<u32>,
    #[arg(long)]
    oxygen_init: Option<f64>,
    #[arg(long, value_enum)]
    migration: Option<Migration>,
    /// Swarm or population size for pso and de.
    #[arg(long)]
    population: Option<usize>,
    /// Run jobs one at a time instead of on all cores.
    #[arg(long)]
    serial: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Migration {
    Keep,
    Resample,
}

impl Common {
    fn config(&self, algorithm: Algorithm) -> ExperimentConfig {
        let mut budget = Budget::evaluations(self.max_evals);
        budget.max_cycles = self.max_cycles;
        ExperimentConfig {
            budget,
            overrides: Overrides {
                groups: self.groups,
                group_size: self.group_size,
                max_dist: self.max_dist,
                max_dives: self.max_dives,
                oxygen_init: self.oxygen_init,
                migration: self.migration.map(|m| match m {
                    Migration::Keep => MigrationPolicy::KeepPosition,
                    Migration::Resample => MigrationPolicy::Resample,
                }),
                population: self.population,
            },
            output_dir: Some(self.out.clone()),
            parallel: !self.serial,
            ..ExperimentConfig::new(algorithm, self.bench.clone())
                .with_seeds(self.seed_base, self.seeds)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run {
            algo,
            common,
            no_timing,
        } => {
            let config = common.config(algo.parse()?);
            println!("budget: {}", describe_budget(&config.budget));
            let outcome = run_experiment(&config)?;
            let options = ReportOptions { timing: !no_timing };
            emit_reports(&outcome.records, &outcome.rows, &common.out, options)?;
            println!("benchmark algorithm n_runs mean_best std_best mean_wall_time_s");
            for r in &outcome.rows {
                println!(
                    "{} {} {} {:e} {:e} {:.3}",
                    r.benchmark, r.algorithm, r.n_runs, r.mean_best, r.std_best, r.mean_wall_time_s
                );
            }
        }
        Command::SweepGroups { k, common } => sweep(SweepParameter::Groups, &k, &common)?,
        Command::SweepSize { sizes, common } => sweep(SweepParameter::GroupSize, &sizes, &common)?,
    }
    Ok(())
}

fn sweep(parameter: SweepParameter, values: &str, common: &Common) -> Result<()> {
    let values = parse_int_range(values)?;
    let config = common.config(Algorithm::Pesoa);
    println!("budget: {}", describe_budget(&config.budget));
    let rows = match parameter {
        SweepParameter::Groups => sweep_groups(&config, &values)?,
        SweepParameter::GroupSize => sweep_group_size(&config, &values)?,
    };
    let path = write_sweep_csv(&common.out, parameter, &config, &rows)?;
    println!(
        "{} mean_amelioration mean_wall_time_s performance_ratio",
        parameter.column()
    );
    for r in &rows {
        println!(
            "{} {:e} {:.4} {:e}",
            r.value, r.mean_amelioration, r.mean_wall_time_s, r.performance_ratio
        );
    }
    println!("wrote {}", path.display());
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
