use std::fmt;
use std::str::FromStr;

use pesoa::pesoa::MigrationPolicy;
use pesoa::{
    run_de, run_pesoa, run_pso, Budget, DeConfig, PesoaConfig, Problem64, PsoConfig, RngStream,
    RunRecord64,
};

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Pesoa,
    Pso,
    De,
}

impl Algorithm {
    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Pesoa => "pesoa",
            Algorithm::Pso => "pso",
            Algorithm::De => "de",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pesoa" => Ok(Algorithm::Pesoa),
            "pso" => Ok(Algorithm::Pso),
            "de" => Ok(Algorithm::De),
            other => Err(HarnessError::Config(format!(
                "unknown algorithm `{other}` (expected pesoa, pso or de)"
            ))),
        }
    }
}

/// Parameter overrides on top of each algorithm's defaults. `None` keeps the
/// default.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub groups: Option<usize>,
    pub group_size: Option<usize>,
    pub max_dist: Option<f64>,
    pub max_dives: Option<u32>,
    pub oxygen_init: Option<f64>,
    pub migration: Option<MigrationPolicy>,
    /// Swarm / population size for PSO and DE.
    pub population: Option<usize>,
}

impl Overrides {
    pub fn pesoa(&self, seed: u64) -> PesoaConfig {
        let d = PesoaConfig::default();
        PesoaConfig {
            groups: self.groups.unwrap_or(d.groups),
            group_size: self.group_size.unwrap_or(d.group_size),
            max_dist: self.max_dist.or(d.max_dist),
            max_dives: self.max_dives.unwrap_or(d.max_dives),
            oxygen_init: self.oxygen_init.unwrap_or(d.oxygen_init),
            migration: self.migration.unwrap_or(d.migration),
            seed,
            ..d
        }
    }

    pub fn pso(&self, seed: u64) -> PsoConfig {
        let d = PsoConfig::default();
        PsoConfig {
            swarm_size: self.population.unwrap_or(d.swarm_size),
            seed,
            ..d
        }
    }

    pub fn de(&self, seed: u64) -> DeConfig {
        let d = DeConfig::default();
        DeConfig {
            population: self.population.unwrap_or(d.population),
            seed,
            ..d
        }
    }

    /// Runs `algorithm` once on `problem` with a stream seeded by `seed`.
    pub fn run(
        &self,
        algorithm: Algorithm,
        problem: &Problem64,
        budget: &Budget,
        seed: u64,
    ) -> Result<RunRecord64> {
        let mut rng = RngStream::new(seed);
        let record = match algorithm {
            Algorithm::Pesoa => run_pesoa(problem, &self.pesoa(seed), budget, &mut rng),
            Algorithm::Pso => run_pso(problem, &self.pso(seed), budget, &mut rng),
            Algorithm::De => run_de(problem, &self.de(seed), budget, &mut rng),
        }?;
        Ok(record)
    }

    pub fn validate(&self, algorithm: Algorithm) -> Result<()> {
        match algorithm {
            Algorithm::Pesoa => self.pesoa(0).validate()?,
            Algorithm::Pso => self.pso(0).validate()?,
            Algorithm::De => self.de(0).validate()?,
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ids() {
        assert_eq!("PeSOA".parse::<Algorithm>().unwrap(), Algorithm::Pesoa);
        assert_eq!("de".parse::<Algorithm>().unwrap(), Algorithm::De);
        assert_eq!("ga".parse::<Algorithm>().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn overrides_apply() {
        let o = Overrides {
            groups: Some(7),
            max_dives: Some(3),
            population: Some(12),
            ..Default::default()
        };
        let c = o.pesoa(5);
        assert_eq!((c.groups, c.group_size, c.max_dives, c.seed), (7, 40, 3, 5));
        assert_eq!(o.pso(0).swarm_size, 12);
        assert_eq!(o.de(0).population, 12);
        assert!(Overrides {
            groups: Some(0),
            ..Default::default()
        }
        .validate(Algorithm::Pesoa)
        .is_err());
    }
}
