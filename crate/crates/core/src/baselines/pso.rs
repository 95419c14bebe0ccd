use std::time::Instant;

use crate::error::{Error, Result};
use crate::problem::{Budget, EvalCounter, Problem};
use crate::record::{RunRecord, TracePoint};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

/// Global-best PSO with the constriction-equivalent coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub swarm_size: usize,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    /// Velocity limit per coordinate as a fraction of that coordinate's range.
    pub velocity_clamp: f64,
    pub seed: u64,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            swarm_size: 40,
            inertia: 0.729,
            cognitive: 1.49445,
            social: 1.49445,
            velocity_clamp: 0.5,
            seed: 0,
        }
    }
}

impl PsoConfig {
    pub fn validate(&self) -> Result<()> {
        if self.swarm_size == 0 {
            return Err(Error::Config("swarm_size must be at least 1".into()));
        }
        if !(self.inertia > 0.0 && self.inertia < 1.0) {
            return Err(Error::Config("inertia must lie in (0, 1)".into()));
        }
        if !(self.cognitive > 0.0 && self.social > 0.0) {
            return Err(Error::Config(
                "acceleration coefficients must be positive".into(),
            ));
        }
        if !(self.velocity_clamp > 0.0 && self.velocity_clamp.is_finite()) {
            return Err(Error::Config("velocity_clamp must be positive".into()));
        }
        Ok(())
    }
}

struct Particle<T> {
    position: Vec<T>,
    velocity: Vec<T>,
    best_position: Vec<T>,
    best_value: T,
}

pub fn run_pso<T: Scalar, R: RandomSource>(
    problem: &Problem<T>,
    config: &PsoConfig,
    budget: &Budget,
    rng: &mut R,
) -> Result<RunRecord<T>> {
    let started = Instant::now();
    config.validate()?;
    budget.validate()?;
    let dim = problem.dim();
    let vmax: Vec<T> = problem
        .lower()
        .iter()
        .zip(problem.upper())
        .map(|(&lo, &hi)| (hi - lo) * T::lit(config.velocity_clamp))
        .collect();
    let (w, c1, c2) = (
        T::lit(config.inertia),
        T::lit(config.cognitive),
        T::lit(config.social),
    );
    let mut counter = EvalCounter::new();

    let mut swarm = Vec::with_capacity(config.swarm_size);
    for _ in 0..config.swarm_size {
        let position = problem.sample_uniform(rng);
        let velocity = vmax
            .iter()
            .map(|&v| T::lit(rng.uniform(-v.as_f64(), v.as_f64())))
            .collect();
        let value = problem.evaluate(&position, &mut counter, rng)?;
        swarm.push(Particle {
            best_position: position.clone(),
            position,
            velocity,
            best_value: value,
        });
    }
    let leader = swarm
        .iter()
        .min_by(|a, b| {
            a.best_value
                .partial_cmp(&b.best_value)
                .expect("finite values")
        })
        .expect("swarm_size >= 1");
    let mut best_position = leader.best_position.clone();
    let mut best_value = leader.best_value;
    let mut trace = vec![TracePoint {
        cycle: 0,
        evaluations: counter.count(),
        best_value,
    }];
    let mut cycle = 0;

    while budget.allows_cycle(cycle, &counter, best_value.as_f64()) {
        for p in &mut swarm {
            if !budget.evaluations_left(&counter) {
                break;
            }
            for d in 0..dim {
                let r1 = T::lit(rng.unit_open());
                let r2 = T::lit(rng.unit_open());
                let v = w * p.velocity[d]
                    + c1 * r1 * (p.best_position[d] - p.position[d])
                    + c2 * r2 * (best_position[d] - p.position[d]);
                p.velocity[d] = v.max(-vmax[d]).min(vmax[d]);
                p.position[d] += p.velocity[d];
            }
            problem.clamp_in_place(&mut p.position);
            let value = problem.evaluate(&p.position, &mut counter, rng)?;
            if value < p.best_value {
                p.best_value = value;
                p.best_position.clone_from(&p.position);
                if value < best_value {
                    best_value = value;
                    best_position.clone_from(&p.position);
                }
            }
        }
        cycle += 1;
        trace.push(TracePoint {
            cycle,
            evaluations: counter.count(),
            best_value,
        });
    }

    Ok(RunRecord {
        algorithm: "pso".into(),
        benchmark: problem.name().to_string(),
        seed: config.seed,
        trace,
        final_best_value: best_value,
        final_best_position: best_position,
        wall_time: started.elapsed(),
    })
}
