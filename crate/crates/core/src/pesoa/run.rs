use std::time::{Duration, Instant};

use crate::error::Result;
use crate::problem::{Budget, EvalCounter, Problem};
use crate::record::{RunRecord, TracePoint};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::config::{PesoaConfig, QefPolicy};
use super::cycle::{improve_penguin, init_population, redistribute};
use super::dynamics::{membership_probabilities, update_qef};
use super::regions::generate_regions;
use super::swarm::SwarmState;

/// What happened during one cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport<T> {
    pub cycle: u64,
    pub evaluations: u64,
    pub dives: u64,
    pub accepted: u64,
    /// Membership probabilities the redistribution sampled from.
    pub probabilities: Vec<T>,
    pub migrations: usize,
    pub groups_removed: usize,
    pub penguins_before: usize,
    pub penguins_after: usize,
}

/// A PeSOA run that can be advanced one cycle at a time.
pub struct PesoaRun<T: Scalar, R> {
    problem: Problem<T>,
    config: PesoaConfig,
    budget: Budget,
    rng: R,
    counter: EvalCounter,
    state: SwarmState<T>,
    trace: Vec<TracePoint<T>>,
    elapsed: Duration,
}

impl<T: Scalar, R: RandomSource> PesoaRun<T, R> {
    /// Places the regions and evaluates the initial population.
    pub fn new(
        problem: &Problem<T>,
        config: &PesoaConfig,
        budget: &Budget,
        mut rng: R,
    ) -> Result<Self> {
        let started = Instant::now();
        config.validate()?;
        budget.validate()?;
        let layout = generate_regions(
            problem,
            config.groups,
            config.separation_for(problem),
            config.min_relaxation,
            &mut rng,
        )?;
        let mut counter = EvalCounter::new();
        let state = init_population(problem, &layout, config, &mut rng, &mut counter)?;
        let trace = vec![TracePoint {
            cycle: 0,
            evaluations: counter.count(),
            best_value: state.global_best.value,
        }];
        Ok(Self {
            problem: problem.clone(),
            config: config.clone(),
            budget: *budget,
            rng,
            counter,
            state,
            trace,
            elapsed: started.elapsed(),
        })
    }

    pub fn state(&self) -> &SwarmState<T> {
        &self.state
    }

    pub fn evaluations(&self) -> u64 {
        self.counter.count()
    }

    pub fn trace(&self) -> &[TracePoint<T>] {
        &self.trace
    }

    pub fn is_finished(&self) -> bool {
        !self.budget.allows_cycle(
            self.state.cycle,
            &self.counter,
            self.state.global_best.value.as_f64(),
        )
    }

    /// Runs one full cycle: oxygen reset, dives, QEF update, global best
    /// update, membership probabilities and redistribution.
    pub fn step(&mut self) -> Result<CycleReport<T>> {
        let started = Instant::now();
        let limit = self.budget.max_evaluations;
        let evals_before = self.counter.count();
        let oxygen_init = T::lit(self.config.oxygen_init);
        let floor = T::lit(self.config.qef_floor);
        let (mut dives, mut accepted) = (0u64, 0u64);

        for group in &mut self.state.groups {
            let mut deltas = Vec::with_capacity(group.members.len());
            for penguin in &mut group.members {
                penguin.oxygen = oxygen_init;
                let stats = improve_penguin(
                    penguin,
                    &mut group.local_best,
                    &self.problem,
                    &self.config,
                    &mut self.rng,
                    &mut self.counter,
                    limit,
                )?;
                dives += u64::from(stats.dives);
                accepted += u64::from(stats.accepted);
                deltas.push(penguin.oxygen - oxygen_init);
            }
            let base = match self.config.qef_policy {
                QefPolicy::Cumulative => group.qef,
                QefPolicy::ResetEachCycle => T::zero(),
            };
            group.qef = update_qef(base, &deltas, floor);
        }
        self.state.refresh_global_best();

        self.state.probabilities = membership_probabilities(&self.state.groups)?;
        let probabilities = self.state.probabilities.clone();
        let moved = redistribute(
            &mut self.state,
            &self.problem,
            &self.config,
            &mut self.rng,
            &mut self.counter,
            limit,
        )?;

        self.state.cycle += 1;
        self.trace.push(TracePoint {
            cycle: self.state.cycle,
            evaluations: self.counter.count(),
            best_value: self.state.global_best.value,
        });
        self.elapsed += started.elapsed();

        Ok(CycleReport {
            cycle: self.state.cycle,
            evaluations: self.counter.count() - evals_before,
            dives,
            accepted,
            probabilities,
            migrations: moved.migrations,
            groups_removed: moved.groups_removed,
            penguins_before: moved.penguins_before,
            penguins_after: moved.penguins_after,
        })
    }

    pub fn finish(self) -> RunRecord<T> {
        RunRecord {
            algorithm: "pesoa".into(),
            benchmark: self.problem.name().to_string(),
            seed: self.config.seed,
            final_best_value: self.state.global_best.value,
            final_best_position: self.state.global_best.position,
            trace: self.trace,
            wall_time: self.elapsed,
        }
    }
}

/// Runs PeSOA on `problem` until `budget` stops it.
pub fn run_pesoa<T: Scalar, R: RandomSource>(
    problem: &Problem<T>,
    config: &PesoaConfig,
    budget: &Budget,
    rng: &mut R,
) -> Result<RunRecord<T>> {
    let mut run = PesoaRun::new(problem, config, budget, rng)?;
    while !run.is_finished() {
        run.step()?;
    }
    Ok(run.finish())
}
