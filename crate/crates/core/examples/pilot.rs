use pesoa::{
    benchmarks, run_de, run_pesoa, run_pso, Budget, DeConfig, PesoaConfig, PsoConfig, RngStream,
};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let id = &args[1];
    let evals: u64 = args[2].parse().unwrap();
    let entry = benchmarks::lookup::<f64>(id).unwrap();
    for algo in ["pesoa", "pso", "de"] {
        let mut finals = vec![];
        let t = std::time::Instant::now();
        for seed in 0..10 {
            let mut rng = RngStream::new(seed);
            let b = Budget::evaluations(evals);
            let r = match algo {
                "pesoa" => run_pesoa(
                    &entry.problem,
                    &PesoaConfig {
                        seed,
                        ..Default::default()
                    },
                    &b,
                    &mut rng,
                ),
                "pso" => run_pso(
                    &entry.problem,
                    &PsoConfig {
                        seed,
                        ..Default::default()
                    },
                    &b,
                    &mut rng,
                ),
                _ => run_de(
                    &entry.problem,
                    &DeConfig {
                        seed,
                        ..Default::default()
                    },
                    &b,
                    &mut rng,
                ),
            }
            .unwrap();
            finals.push(r.final_best_value);
        }
        let mut s = finals.clone();
        s.sort_by(|a, b| a.partial_cmp(b).unwrap());
        println!(
            "{id} {algo}: median {:.6e} min {:.6e} max {:.6e} ({:?})",
            (s[4] + s[5]) / 2.0,
            s[0],
            s[9],
            t.elapsed()
        );
    }
}
