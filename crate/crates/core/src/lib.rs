//! Penguin search optimisation (PeSOA) for bound-constrained global
//! minimization, together with a catalogue of standard test functions and
//! two reference optimizers (PSO and DE/rand/1/bin).
//!
//! All numerical code is generic over [`Scalar`] (`f32` or `f64`). The
//! `*64` aliases at the crate root fix the scalar to `f64`, which is what
//! the experiment harness uses.
//!
//! ```
//! use pesoa::{benchmarks, Budget, PesoaConfig, RngStream};
//!
//! let problem = benchmarks::sphere::<f64>(2);
//! let mut rng = RngStream::new(7);
//! let record = pesoa::run_pesoa(&problem, &PesoaConfig::default(), &Budget::evaluations(20_000), &mut rng)
//!     .unwrap();
//! assert!(record.final_best_value < 1e-3);
//! ```

pub mod baselines;
pub mod benchmarks;
mod error;
pub mod pesoa;
mod problem;
mod record;
mod rng;
mod scalar;

pub use baselines::{run_de, run_pso, DeConfig, PsoConfig};
pub use error::{Error, Result};
pub use pesoa::{run_pesoa, PesoaConfig};
pub use problem::{clamp_to_bounds, evaluate, Budget, EvalCounter, Problem};
pub use record::{RunRecord, TracePoint};
pub use rng::{RandomSource, RngStream};
pub use scalar::Scalar;

pub type Problem64 = Problem<f64>;
pub type Problem32 = Problem<f32>;
pub type RunRecord64 = RunRecord<f64>;
pub type RunRecord32 = RunRecord<f32>;
pub type SwarmState64 = pesoa::SwarmState<f64>;
pub type BenchmarkEntry64 = benchmarks::BenchmarkEntry<f64>;
