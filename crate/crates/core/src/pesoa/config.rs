use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::scalar::Scalar;

/// How the random factor of a dive is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Turbulence {
    /// Independent uniform draw per coordinate.
    #[default]
    PerDimension,
    /// One draw shared by all coordinates, so the step is collinear with the
    /// direction to the local best.
    Scalar,
}

/// Where a penguin ends up after switching groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MigrationPolicy {
    /// Uniform re-sample inside the destination group's region, then
    /// re-evaluated.
    Resample,
    /// Keep the current position and value; the penguin starts following
    /// the destination group's local best.
    #[default]
    KeepPosition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QefPolicy {
    /// QEF accumulates across cycles.
    #[default]
    Cumulative,
    /// QEF restarts from zero every cycle.
    ResetEachCycle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PesoaConfig {
    /// Number of groups K.
    pub groups: usize,
    /// Penguins per group; the population is `groups * group_size`.
    pub group_size: usize,
    /// Minimum separation between region centers. `None` uses a quarter of
    /// the bounding box diagonal divided by `groups`.
    pub max_dist: Option<f64>,
    /// Oxygen given to every penguin at the start of each cycle. With 2.0
    /// the first dive lands anywhere between the penguin and its mirror
    /// image through the local best; values up to 1.0 can only contract
    /// the group toward its local best.
    pub oxygen_init: f64,
    /// Upper bound on dives per penguin per cycle.
    pub max_dives: u32,
    /// Lower bound kept on every group's QEF.
    pub qef_floor: f64,
    /// Region placement gives up once the relaxed separation would drop
    /// below this fraction of the requested one.
    pub min_relaxation: f64,
    pub seed: u64,
    pub turbulence: Turbulence,
    pub migration: MigrationPolicy,
    pub qef_policy: QefPolicy,
}

impl Default for PesoaConfig {
    fn default() -> Self {
        Self {
            groups: 5,
            group_size: 40,
            max_dist: None,
            oxygen_init: 2.0,
            max_dives: 20,
            qef_floor: 1e-9,
            min_relaxation: 0.5,
            seed: 0,
            turbulence: Turbulence::default(),
            migration: MigrationPolicy::default(),
            qef_policy: QefPolicy::default(),
        }
    }
}

impl PesoaConfig {
    pub fn population(&self) -> usize {
        self.groups * self.group_size
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Config(msg.to_string()));
        if self.groups == 0 {
            return fail("groups must be at least 1");
        }
        if self.group_size == 0 {
            return fail("group_size must be at least 1");
        }
        if let Some(d) = self.max_dist {
            if !(d.is_finite() && d > 0.0) {
                return fail("max_dist must be positive and finite");
            }
        }
        if !(self.oxygen_init.is_finite() && self.oxygen_init > 0.0) {
            return fail("oxygen_init must be positive and finite");
        }
        if self.max_dives == 0 {
            return fail("max_dives must be at least 1");
        }
        if !(self.qef_floor.is_finite() && self.qef_floor > 0.0) {
            return fail("qef_floor must be positive and finite");
        }
        if !(self.min_relaxation > 0.0 && self.min_relaxation <= 1.0) {
            return fail("min_relaxation must lie in (0, 1]");
        }
        Ok(())
    }

    /// Requested center separation for `problem`.
    pub fn separation_for<T: Scalar>(&self, problem: &Problem<T>) -> f64 {
        self.max_dist
            .unwrap_or_else(|| 0.25 * problem.diagonal().as_f64() / self.groups as f64)
    }
}
