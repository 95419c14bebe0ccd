use crate::error::Result;
use crate::problem::{EvalCounter, Problem};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::config::{MigrationPolicy, PesoaConfig};
use super::dynamics::{dive_update, oxygen_update, roulette_select};
use super::regions::RegionLayout;
use super::swarm::{Group, Incumbent, Penguin, SwarmState};

/// Builds the initial swarm: one group per region center, each filled with
/// `config.group_size` penguins drawn uniformly from the region box
/// (center ± half the separation, cut to the bounds) and evaluated once.
pub fn init_population<T: Scalar, R: RandomSource>(
    problem: &Problem<T>,
    layout: &RegionLayout<T>,
    config: &PesoaConfig,
    rng: &mut R,
    counter: &mut EvalCounter,
) -> Result<SwarmState<T>> {
    let radius = layout.threshold / T::lit(2.0);
    let oxygen = T::lit(config.oxygen_init);
    let mut groups = Vec::with_capacity(layout.centers.len());

    for (id, center) in layout.centers.iter().enumerate() {
        let lo: Vec<T> = center.iter().map(|&c| c - radius).collect();
        let hi: Vec<T> = center.iter().map(|&c| c + radius).collect();
        let mut members = Vec::with_capacity(config.group_size);
        for _ in 0..config.group_size {
            let position = problem.sample_in_box(&lo, &hi, rng);
            let value = problem.evaluate(&position, counter, rng)?;
            members.push(Penguin {
                position,
                oxygen,
                value,
            });
        }
        let best = members
            .iter()
            .min_by(|a, b| a.value.partial_cmp(&b.value).expect("finite values"))
            .expect("group_size >= 1");
        let local_best = Incumbent {
            position: best.position.clone(),
            value: best.value,
        };
        groups.push(Group {
            id,
            center: center.clone(),
            radius,
            members,
            local_best,
            qef: T::lit(config.qef_floor),
        });
    }

    let global_best = groups
        .iter()
        .map(|g| &g.local_best)
        .min_by(|a, b| a.value.partial_cmp(&b.value).expect("finite values"))
        .expect("at least one group")
        .clone();
    let k = groups.len();
    Ok(SwarmState {
        groups,
        global_best,
        cycle: 0,
        probabilities: vec![T::one() / T::lit(k as f64); k],
        separation: layout.threshold,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DiveStats {
    pub dives: u32,
    pub accepted: u32,
}

/// Repeated dives of one penguin toward its group's local best.
///
/// Stops when the penguin's oxygen is exhausted, after `config.max_dives`
/// dives, or when `eval_limit` evaluations have been spent. A dive is kept
/// only if it strictly improves the penguin; oxygen is updated from the
/// attempted move either way.
pub fn improve_penguin<T: Scalar, R: RandomSource>(
    penguin: &mut Penguin<T>,
    local_best: &mut Incumbent<T>,
    problem: &Problem<T>,
    config: &PesoaConfig,
    rng: &mut R,
    counter: &mut EvalCounter,
    eval_limit: Option<u64>,
) -> Result<DiveStats> {
    let mut stats = DiveStats::default();
    while penguin.oxygen > T::zero()
        && stats.dives < config.max_dives
        && eval_limit.is_none_or(|max| counter.count() < max)
    {
        let candidate = dive_update(
            penguin,
            &local_best.position,
            rng,
            problem,
            config.turbulence,
        );
        let value = problem.evaluate(&candidate, counter, rng)?;
        stats.dives += 1;
        let oxygen = oxygen_update(
            penguin.oxygen,
            penguin.value,
            value,
            &penguin.position,
            &candidate,
        );
        if value < penguin.value {
            stats.accepted += 1;
            local_best.offer(&candidate, value);
            penguin.position = candidate;
            penguin.value = value;
        }
        penguin.oxygen = oxygen;
    }
    Ok(stats)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Redistribution {
    pub migrations: usize,
    /// Migrants placed anew and re-evaluated.
    pub resampled: usize,
    pub groups_removed: usize,
    pub penguins_before: usize,
    pub penguins_after: usize,
}

/// Lets every penguin pick a group by roulette over `state.probabilities`.
///
/// Penguins that pick their own group stay as they are. Migrants join the
/// destination group (re-sampled inside its region under
/// [`MigrationPolicy::Resample`] while evaluations remain) and may improve
/// its local best. Groups left without members are dropped.
pub fn redistribute<T: Scalar, R: RandomSource>(
    state: &mut SwarmState<T>,
    problem: &Problem<T>,
    config: &PesoaConfig,
    rng: &mut R,
    counter: &mut EvalCounter,
    eval_limit: Option<u64>,
) -> Result<Redistribution> {
    let mut report = Redistribution {
        penguins_before: state.penguin_count(),
        ..Default::default()
    };
    let k = state.groups.len();
    assert_eq!(
        state.probabilities.len(),
        k,
        "probabilities must match the live groups"
    );

    if k > 1 {
        let mut arrivals: Vec<Vec<Penguin<T>>> = vec![Vec::new(); k];
        for from in 0..k {
            let members = std::mem::take(&mut state.groups[from].members);
            let mut stay = Vec::with_capacity(members.len());
            for p in members {
                let to = roulette_select(&state.probabilities, rng);
                if to == from {
                    stay.push(p);
                } else {
                    arrivals[to].push(p);
                }
            }
            state.groups[from].members = stay;
        }

        for (to, incoming) in arrivals.into_iter().enumerate() {
            let lo = state.groups[to].region_lower();
            let hi = state.groups[to].region_upper();
            for mut p in incoming {
                report.migrations += 1;
                let budget_left = eval_limit.is_none_or(|max| counter.count() < max);
                if config.migration == MigrationPolicy::Resample && budget_left {
                    p.position = problem.sample_in_box(&lo, &hi, rng);
                    p.value = problem.evaluate(&p.position, counter, rng)?;
                    report.resampled += 1;
                }
                let group = &mut state.groups[to];
                group.local_best.offer(&p.position, p.value);
                group.members.push(p);
            }
        }
    }

    let before = state.groups.len();
    state.groups.retain(|g| !g.members.is_empty());
    report.groups_removed = before - state.groups.len();
    report.penguins_after = state.penguin_count();
    state.refresh_global_best();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pesoa::regions::generate_regions;
    use crate::rng::RngStream;

    struct Fixed(f64);

    impl RandomSource for Fixed {
        fn unit_open(&mut self) -> f64 {
            self.0
        }
    }

    fn sphere(dim: usize) -> Problem<f64> {
        Problem::hypercube("sphere", dim, -5.0, 5.0, |x: &[f64]| {
            x.iter().map(|v| v * v).sum()
        })
        .unwrap()
    }

    fn small_swarm(
        k: usize,
        size: usize,
        seed: u64,
    ) -> (Problem<f64>, PesoaConfig, SwarmState<f64>, EvalCounter) {
        let problem = sphere(2);
        let config = PesoaConfig {
            groups: k,
            group_size: size,
            ..Default::default()
        };
        let mut rng = RngStream::new(seed);
        let layout =
            generate_regions(&problem, k, config.separation_for(&problem), 0.5, &mut rng).unwrap();
        let mut counter = EvalCounter::new();
        let state = init_population(&problem, &layout, &config, &mut rng, &mut counter).unwrap();
        (problem, config, state, counter)
    }

    #[test]
    fn init_single_group() {
        let (problem, _, state, counter) = small_swarm(1, 3, 7);
        assert_eq!(state.groups.len(), 1);
        assert_eq!(state.groups[0].members.len(), 3);
        assert_eq!(counter.count(), 3);
        assert!(state.penguins().all(|p| problem.contains(&p.position)));
        let brute = state
            .penguins()
            .map(|p| p.value)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(state.global_best.value, brute);
        assert_eq!(state.groups[0].qef, 1e-9);
        assert!(state.penguins().all(|p| p.oxygen == 2.0));
    }

    #[test]
    fn init_members_stay_in_their_region() {
        let (_, _, state, _) = small_swarm(4, 10, 3);
        for g in &state.groups {
            let (lo, hi) = (g.region_lower(), g.region_upper());
            for p in &g.members {
                for d in 0..2 {
                    assert!(lo[d] <= p.position[d] && p.position[d] <= hi[d]);
                }
            }
        }
    }

    #[test]
    fn dives_at_local_best_spend_the_cap_without_moving() {
        let problem = Problem::hypercube("line", 1, -1.0, 1.0, |x: &[f64]| x[0] * x[0]).unwrap();
        let config = PesoaConfig {
            max_dives: 5,
            ..Default::default()
        };
        let mut penguin = Penguin {
            position: vec![0.5],
            oxygen: 1.0,
            value: 0.25,
        };
        let mut best = Incumbent {
            position: vec![0.5],
            value: 0.25,
        };
        let mut counter = EvalCounter::new();
        let stats = improve_penguin(
            &mut penguin,
            &mut best,
            &problem,
            &config,
            &mut RngStream::new(1),
            &mut counter,
            None,
        )
        .unwrap();
        assert_eq!(
            stats,
            DiveStats {
                dives: 5,
                accepted: 0
            }
        );
        assert_eq!(counter.count(), 5);
        assert_eq!(penguin.position, vec![0.5]);
        assert_eq!(penguin.oxygen, 1.0);
    }

    #[test]
    fn a_rejected_dive_can_exhaust_oxygen() {
        // f(0) = 1, f(1) = 3, f(2) = 0. With u = 0.25 the dive from 0 lands
        // on 1: oxygen 2 + (1 - 3) * 1 = 0.
        let problem = Problem::hypercube("bump", 1, -5.0, 5.0, |x: &[f64]| {
            if x[0] == 0.0 {
                1.0
            } else if x[0] == 1.0 {
                3.0
            } else {
                0.0
            }
        })
        .unwrap();
        let config = PesoaConfig {
            oxygen_init: 2.0,
            ..Default::default()
        };
        let mut penguin = Penguin {
            position: vec![0.0],
            oxygen: 2.0,
            value: 1.0,
        };
        let mut best = Incumbent {
            position: vec![2.0],
            value: 0.0,
        };
        let mut counter = EvalCounter::new();
        let stats = improve_penguin(
            &mut penguin,
            &mut best,
            &problem,
            &config,
            &mut Fixed(0.25),
            &mut counter,
            None,
        )
        .unwrap();
        assert_eq!(
            stats,
            DiveStats {
                dives: 1,
                accepted: 0
            }
        );
        assert_eq!(penguin.oxygen, 0.0);
        assert_eq!(penguin.position, vec![0.0]);
    }

    #[test]
    fn accepted_dives_improve_and_feed_local_best() {
        let problem = sphere(2);
        let config = PesoaConfig::default();
        let mut penguin = Penguin {
            position: vec![4.0, 4.0],
            oxygen: 1.0,
            value: 32.0,
        };
        let mut best = Incumbent {
            position: vec![0.5, 0.5],
            value: 0.5,
        };
        let mut counter = EvalCounter::new();
        let mut rng = RngStream::new(17);
        let start = penguin.value;
        let stats = improve_penguin(
            &mut penguin,
            &mut best,
            &problem,
            &config,
            &mut rng,
            &mut counter,
            None,
        )
        .unwrap();
        assert!(stats.accepted >= 1);
        assert!(penguin.value < start);
        assert!(best.value <= penguin.value);
        assert_eq!(counter.count(), stats.dives as u64);
    }

    #[test]
    fn eval_limit_stops_dives() {
        let problem = Problem::hypercube("line", 1, -1.0, 1.0, |x: &[f64]| x[0] * x[0]).unwrap();
        let mut penguin = Penguin {
            position: vec![0.5],
            oxygen: 1.0,
            value: 0.25,
        };
        let mut best = penguin_incumbent(&penguin);
        let mut counter = EvalCounter::new();
        improve_penguin(
            &mut penguin,
            &mut best,
            &problem,
            &PesoaConfig::default(),
            &mut RngStream::new(0),
            &mut counter,
            Some(3),
        )
        .unwrap();
        assert_eq!(counter.count(), 3);
    }

    fn penguin_incumbent(p: &Penguin<f64>) -> Incumbent<f64> {
        Incumbent {
            position: p.position.clone(),
            value: p.value,
        }
    }

    #[test]
    fn single_group_never_migrates() {
        let (problem, config, mut state, mut counter) = small_swarm(1, 6, 2);
        let before = state.clone();
        state.probabilities = vec![1.0];
        let report = redistribute(
            &mut state,
            &problem,
            &config,
            &mut RngStream::new(0),
            &mut counter,
            None,
        )
        .unwrap();
        assert_eq!(report.migrations, 0);
        assert_eq!(state.groups, before.groups);
        assert_eq!(counter.count(), 6);
    }

    #[test]
    fn forced_draw_sends_everyone_to_the_heavy_group() {
        let (problem, mut config, mut state, mut counter) = small_swarm(2, 5, 4);
        config.migration = MigrationPolicy::Resample;
        let eps = 1e-9;
        state.probabilities = vec![1.0 - eps, eps];
        let report = redistribute(
            &mut state,
            &problem,
            &config,
            &mut Fixed(0.5),
            &mut counter,
            None,
        )
        .unwrap();
        assert_eq!(report.migrations, 5);
        assert_eq!(report.groups_removed, 1);
        assert_eq!(state.groups.len(), 1);
        assert_eq!(state.groups[0].id, 0);
        assert_eq!(state.groups[0].members.len(), 10);
        assert_eq!(counter.count(), 15);
        let g = &state.groups[0];
        let (lo, hi) = (g.region_lower(), g.region_upper());
        for p in &g.members[5..] {
            assert!((0..2).all(|d| lo[d] <= p.position[d] && p.position[d] <= hi[d]));
        }
    }

    #[test]
    fn redistribution_conserves_penguins_and_best() {
        for seed in 0..20 {
            let (problem, mut config, mut state, mut counter) = small_swarm(5, 8, seed);
            if seed % 2 == 0 {
                config.migration = MigrationPolicy::Resample;
            }
            state.probabilities = vec![0.1, 0.3, 0.2, 0.25, 0.15];
            let best = state.global_best.value;
            let mut rng = RngStream::new(seed + 100);
            let report =
                redistribute(&mut state, &problem, &config, &mut rng, &mut counter, None).unwrap();
            assert_eq!(report.penguins_before, 40);
            assert_eq!(report.penguins_after, 40);
            assert_eq!(state.penguin_count(), 40);
            assert!(state.global_best.value <= best);
            assert!(state.penguins().all(|p| problem.contains(&p.position)));
            for g in &state.groups {
                assert!(!g.members.is_empty());
                assert!(g.members.iter().all(|p| g.local_best.value <= p.value));
            }
        }
    }

    #[test]
    fn keep_position_migrants_are_not_reevaluated() {
        let (problem, mut config, mut state, mut counter) = small_swarm(3, 6, 9);
        config.migration = MigrationPolicy::KeepPosition;
        state.probabilities = vec![0.2, 0.3, 0.5];
        let mut positions: Vec<Vec<f64>> = state.penguins().map(|p| p.position.clone()).collect();
        redistribute(
            &mut state,
            &problem,
            &config,
            &mut RngStream::new(1),
            &mut counter,
            None,
        )
        .unwrap();
        assert_eq!(counter.count(), 18);
        let mut after: Vec<Vec<f64>> = state.penguins().map(|p| p.position.clone()).collect();
        let key = |v: &Vec<f64>| (v[0].to_bits(), v[1].to_bits());
        positions.sort_by_key(key);
        after.sort_by_key(key);
        assert_eq!(positions, after);
    }
}
