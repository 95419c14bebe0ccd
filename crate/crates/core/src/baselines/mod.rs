//! Reference optimizers sharing the [`Problem`](crate::Problem) /
//! [`Budget`](crate::Budget) / [`RunRecord`](crate::RunRecord) contract
//! with PeSOA. One cycle is one sweep over the population.

mod de;
mod pso;

pub use de::{run_de, DeConfig};
pub use pso::{run_pso, PsoConfig};
