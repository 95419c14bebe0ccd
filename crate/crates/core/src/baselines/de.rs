use std::time::Instant;

use crate::error::{Error, Result};
use crate::problem::{Budget, EvalCounter, Problem};
use crate::record::{RunRecord, TracePoint};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

/// DE/rand/1/bin settings.
#[derive(Debug, Clone, PartialEq)]
pub struct DeConfig {
    pub population: usize,
    /// Differential weight F.
    pub weight: f64,
    /// Crossover rate CR.
    pub crossover: f64,
    pub seed: u64,
}

impl Default for DeConfig {
    fn default() -> Self {
        Self {
            population: 40,
            weight: 0.5,
            crossover: 0.9,
            seed: 0,
        }
    }
}

impl DeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population < 4 {
            return Err(Error::Config(
                "DE/rand/1 needs a population of at least 4".into(),
            ));
        }
        if !(self.weight > 0.0 && self.weight <= 2.0) {
            return Err(Error::Config(
                "differential weight must lie in (0, 2]".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.crossover) {
            return Err(Error::Config("crossover rate must lie in [0, 1]".into()));
        }
        Ok(())
    }
}

/// Three distinct indices below `n`, all different from `skip`.
fn pick_three<R: RandomSource>(n: usize, skip: usize, rng: &mut R) -> [usize; 3] {
    let mut picked = [usize::MAX; 3];
    for k in 0..3 {
        picked[k] = loop {
            let c = rng.index_below(n);
            if c != skip && !picked[..k].contains(&c) {
                break c;
            }
        };
    }
    picked
}

pub fn run_de<T: Scalar, R: RandomSource>(
    problem: &Problem<T>,
    config: &DeConfig,
    budget: &Budget,
    rng: &mut R,
) -> Result<RunRecord<T>> {
    let started = Instant::now();
    config.validate()?;
    budget.validate()?;
    let dim = problem.dim();
    let f = T::lit(config.weight);
    let mut counter = EvalCounter::new();

    let mut population: Vec<Vec<T>> = Vec::with_capacity(config.population);
    let mut values: Vec<T> = Vec::with_capacity(config.population);
    for _ in 0..config.population {
        let x = problem.sample_uniform(rng);
        values.push(problem.evaluate(&x, &mut counter, rng)?);
        population.push(x);
    }
    let mut best = argmin(&values);
    let mut trace = vec![TracePoint {
        cycle: 0,
        evaluations: counter.count(),
        best_value: values[best],
    }];
    let mut cycle = 0;

    while budget.allows_cycle(cycle, &counter, values[best].as_f64()) {
        let mut next = population.clone();
        let mut next_values = values.clone();
        for i in 0..config.population {
            if !budget.evaluations_left(&counter) {
                break;
            }
            let [a, b, c] = pick_three(config.population, i, rng);
            let forced = rng.index_below(dim);
            let mut trial: Vec<T> = (0..dim)
                .map(|j| {
                    if j == forced || rng.unit_open() < config.crossover {
                        population[a][j] + f * (population[b][j] - population[c][j])
                    } else {
                        population[i][j]
                    }
                })
                .collect();
            problem.clamp_in_place(&mut trial);
            let value = problem.evaluate(&trial, &mut counter, rng)?;
            if value <= values[i] {
                next[i] = trial;
                next_values[i] = value;
            }
        }
        population = next;
        values = next_values;
        best = argmin(&values);
        cycle += 1;
        trace.push(TracePoint {
            cycle,
            evaluations: counter.count(),
            best_value: values[best],
        });
    }

    Ok(RunRecord {
        algorithm: "de".into(),
        benchmark: problem.name().to_string(),
        seed: config.seed,
        trace,
        final_best_value: values[best],
        final_best_position: population.swap_remove(best),
        wall_time: started.elapsed(),
    })
}

fn argmin<T: Scalar>(values: &[T]) -> usize {
    values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).expect("finite values"))
        .map(|(i, _)| i)
        .expect("non-empty population")
}
