//! Penguin search optimisation.
//!
//! The population is split into groups, each foraging in its own region of
//! the search box. A cycle resets every penguin's oxygen, lets each penguin
//! dive toward its group's local best until its oxygen runs out or the dive
//! cap is hit, credits each group with the oxygen its members gained (the
//! quantity of eaten fish, QEF), and finally lets every penguin pick a group
//! with probability proportional to QEF. Penguins that switch groups are
//! re-sampled inside their new group's region; groups nobody picked are
//! abandoned.

mod config;
mod cycle;
mod dynamics;
mod regions;
mod run;
mod swarm;

pub use config::{MigrationPolicy, PesoaConfig, QefPolicy, Turbulence};
pub use cycle::{improve_penguin, init_population, redistribute, DiveStats, Redistribution};
pub use dynamics::{
    dive_update, membership_probabilities, oxygen_update, probabilities_from_qef, roulette_select,
    update_qef,
};
pub use regions::{generate_regions, RegionLayout};
pub use run::{run_pesoa, CycleReport, PesoaRun};
pub use swarm::{Group, Incumbent, Penguin, SwarmState};
