//! Invariants every optimizer in the crate must satisfy.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Duration;

use pesoa::{
    benchmarks, run_de, run_pesoa, run_pso, Budget, DeConfig, PesoaConfig, Problem, PsoConfig,
    Result, RngStream, RunRecord,
};
use proptest::prelude::*;

#[derive(Clone, Copy, Debug)]
enum Algo {
    Pesoa,
    Pso,
    De,
}

const ALL: [Algo; 3] = [Algo::Pesoa, Algo::Pso, Algo::De];

fn run(algo: Algo, problem: &Problem<f64>, budget: &Budget, seed: u64) -> Result<RunRecord<f64>> {
    let mut rng = RngStream::new(seed);
    match algo {
        Algo::Pesoa => run_pesoa(
            problem,
            &PesoaConfig {
                seed,
                groups: 3,
                group_size: 10,
                ..Default::default()
            },
            budget,
            &mut rng,
        ),
        Algo::Pso => run_pso(
            problem,
            &PsoConfig {
                seed,
                swarm_size: 20,
                ..Default::default()
            },
            budget,
            &mut rng,
        ),
        Algo::De => run_de(
            problem,
            &DeConfig {
                seed,
                population: 20,
                ..Default::default()
            },
            budget,
            &mut rng,
        ),
    }
}

/// Rastrigin wrapped so every evaluation is counted and checked against the
/// bounds independently of the optimizer's own bookkeeping.
struct Watched {
    problem: Problem<f64>,
    calls: Arc<AtomicU64>,
    out_of_bounds: Arc<AtomicBool>,
}

fn watched(dim: usize, lo: f64, hi: f64) -> Watched {
    let calls = Arc::new(AtomicU64::new(0));
    let out_of_bounds = Arc::new(AtomicBool::new(false));
    let (c, o) = (calls.clone(), out_of_bounds.clone());
    let problem = Problem::hypercube("watched", dim, lo, hi, move |x: &[f64]| {
        c.fetch_add(1, Ordering::Relaxed);
        if x.iter().any(|&v| !(lo..=hi).contains(&v)) {
            o.store(true, Ordering::Relaxed);
        }
        benchmarks::functions::rastrigin(x)
    })
    .unwrap();
    Watched {
        problem,
        calls,
        out_of_bounds,
    }
}

fn assert_trace_contract(r: &RunRecord<f64>) {
    for w in r.trace.windows(2) {
        assert!(
            w[1].best_value <= w[0].best_value,
            "{}: best rose {w:?}",
            r.algorithm
        );
        assert!(
            w[1].evaluations > w[0].evaluations,
            "{}: evaluations stalled {w:?}",
            r.algorithm
        );
        assert_eq!(w[1].cycle, w[0].cycle + 1);
    }
    assert_eq!(r.trace.last().unwrap().best_value, r.final_best_value);
}

#[test]
fn feasibility_and_eval_accounting() {
    for algo in ALL {
        for seed in 0..5 {
            let w = watched(5, -2.0, 3.0);
            let r = run(algo, &w.problem, &Budget::evaluations(3_000), seed).unwrap();
            assert!(
                !w.out_of_bounds.load(Ordering::Relaxed),
                "{algo:?} evaluated outside the box"
            );
            assert_eq!(
                w.calls.load(Ordering::Relaxed),
                r.evaluations(),
                "{algo:?} hidden evaluations"
            );
            assert!(r.evaluations() <= 3_000);
            assert!(w.problem.contains(&r.final_best_position));
            assert_trace_contract(&r);
        }
    }
}

#[test]
fn final_position_reproduces_final_value() {
    let p = benchmarks::rosenbrock::<f64>(4);
    for algo in ALL {
        let r = run(algo, &p, &Budget::evaluations(2_000), 1).unwrap();
        assert_eq!(
            benchmarks::functions::rosenbrock(&r.final_best_position),
            r.final_best_value
        );
    }
}

#[test]
fn determinism() {
    let p = benchmarks::griewank::<f64>(6);
    for algo in ALL {
        let strip = |mut r: RunRecord<f64>| {
            r.wall_time = Duration::ZERO;
            r
        };
        let a = strip(run(algo, &p, &Budget::evaluations(4_000), 77).unwrap());
        let b = strip(run(algo, &p, &Budget::evaluations(4_000), 77).unwrap());
        assert_eq!(a, b, "{algo:?}");
    }
}

#[test]
fn zero_cycle_budget_keeps_only_initialization() {
    let p = benchmarks::sphere::<f64>(3);
    for algo in ALL {
        let r = run(algo, &p, &Budget::cycles(0), 0).unwrap();
        assert_eq!(r.trace.len(), 1, "{algo:?}");
        assert_eq!(r.cycles(), 0);
    }
}

#[test]
fn sphere_2d_median_below_1e3() {
    let p = benchmarks::sphere::<f64>(2);
    for (algo, make) in [("pesoa", 0), ("pso", 1), ("de", 2)] {
        let mut finals: Vec<f64> = (0..10)
            .map(|seed| {
                let budget = Budget::evaluations(20_000);
                let mut rng = RngStream::new(seed);
                match make {
                    0 => run_pesoa(
                        &p,
                        &PesoaConfig {
                            seed,
                            ..Default::default()
                        },
                        &budget,
                        &mut rng,
                    ),
                    1 => run_pso(
                        &p,
                        &PsoConfig {
                            seed,
                            ..Default::default()
                        },
                        &budget,
                        &mut rng,
                    ),
                    _ => run_de(
                        &p,
                        &DeConfig {
                            seed,
                            ..Default::default()
                        },
                        &budget,
                        &mut rng,
                    ),
                }
                .unwrap()
                .final_best_value
            })
            .collect();
        finals.sort_by(f64::total_cmp);
        let median = 0.5 * (finals[4] + finals[5]);
        assert!(median < 1e-3, "{algo}: median {median}");
        if algo == "pesoa" {
            assert!(
                finals[9] < 1e-3,
                "pesoa must converge for every seed: {finals:?}"
            );
        }
    }
}

#[test]
fn target_value_stops_every_optimizer() {
    let p = benchmarks::sphere::<f64>(2);
    for algo in ALL {
        let r = run(algo, &p, &Budget::evaluations(500_000).with_target(1.0), 3).unwrap();
        assert!(r.final_best_value <= 1.0);
        assert!(r.evaluations() < 500_000, "{algo:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monotone_best_for_any_seed(seed in any::<u64>(), which in 0usize..3, dim in 1usize..6) {
        let p = benchmarks::ackley::<f64>(dim);
        let r = run(ALL[which], &p, &Budget::evaluations(1_500), seed).unwrap();
        for w in r.trace.windows(2) {
            prop_assert!(w[1].best_value <= w[0].best_value);
        }
    }
}
