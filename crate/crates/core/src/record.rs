use std::time::Duration;

use crate::scalar::Scalar;

/// Best value known after a cycle, with the evaluations spent so far.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint<T> {
    pub cycle: u64,
    pub evaluations: u64,
    pub best_value: T,
}

/// Outcome of one optimizer run.
///
/// `trace[0]` is the state after initialization (cycle 0). `wall_time`
/// covers the optimizer only.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord<T> {
    pub algorithm: String,
    pub benchmark: String,
    pub seed: u64,
    pub trace: Vec<TracePoint<T>>,
    pub final_best_value: T,
    pub final_best_position: Vec<T>,
    pub wall_time: Duration,
}

impl<T: Scalar> RunRecord<T> {
    pub fn initial_best(&self) -> T {
        self.trace
            .first()
            .map_or(self.final_best_value, |p| p.best_value)
    }

    pub fn evaluations(&self) -> u64 {
        self.trace.last().map_or(0, |p| p.evaluations)
    }

    pub fn cycles(&self) -> u64 {
        self.trace.last().map_or(0, |p| p.cycle)
    }

    /// Initial best minus final best; never negative for a monotone trace.
    pub fn amelioration(&self) -> T {
        self.initial_best() - self.final_best_value
    }
}
