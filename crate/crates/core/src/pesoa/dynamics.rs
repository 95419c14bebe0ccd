//! The per-dive, per-group and per-swarm update rules.

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::RandomSource;
use crate::scalar::{distance, Scalar};

use super::config::Turbulence;
use super::swarm::{Group, Penguin};

/// Candidate position for one dive of `penguin` toward `local_best`:
/// `x + oxygen * u * (local_best - x)`, clamped to the bounds.
///
/// The penguin itself is left untouched.
pub fn dive_update<T: Scalar, R: RandomSource + ?Sized>(
    penguin: &Penguin<T>,
    local_best: &[T],
    rng: &mut R,
    problem: &Problem<T>,
    turbulence: Turbulence,
) -> Vec<T> {
    let shared = match turbulence {
        Turbulence::Scalar => Some(T::lit(rng.unit_open())),
        Turbulence::PerDimension => None,
    };
    let mut candidate: Vec<T> = penguin
        .position
        .iter()
        .zip(local_best)
        .map(|(&x, &best)| {
            let u = shared.unwrap_or_else(|| T::lit(rng.unit_open()));
            x + penguin.oxygen * u * (best - x)
        })
        .collect();
    problem.clamp_in_place(&mut candidate);
    candidate
}

/// Oxygen after a dive from `old_pos` to `new_pos`.
///
/// Grows by improvement times distance swum and shrinks the same way on a
/// worsening move (minimization: improvement is `old_value - new_value`).
/// Never drops below zero.
pub fn oxygen_update<T: Scalar>(
    oxygen: T,
    old_value: T,
    new_value: T,
    old_pos: &[T],
    new_pos: &[T],
) -> T {
    let swum = distance(old_pos, new_pos);
    if swum == T::zero() {
        return oxygen;
    }
    (oxygen + (old_value - new_value) * swum).max(T::zero())
}

/// Adds the members' oxygen changes for this cycle to a group's QEF,
/// keeping it at or above `floor`.
pub fn update_qef<T: Scalar>(qef: T, oxygen_deltas: &[T], floor: T) -> T {
    let gained: T = oxygen_deltas.iter().copied().sum();
    (qef + gained).max(floor)
}

/// Normalizes QEF values into membership probabilities.
pub fn probabilities_from_qef<T: Scalar>(qefs: &[T]) -> Result<Vec<T>> {
    if qefs.is_empty() {
        return Err(Error::NoGroups);
    }
    let total: T = qefs.iter().copied().sum();
    Ok(qefs.iter().map(|&q| q / total).collect())
}

pub fn membership_probabilities<T: Scalar>(groups: &[Group<T>]) -> Result<Vec<T>> {
    let qefs: Vec<T> = groups.iter().map(|g| g.qef).collect();
    probabilities_from_qef(&qefs)
}

/// Roulette-wheel pick: the first index whose cumulative probability
/// exceeds one uniform draw. Rounding slack at the top falls on the last
/// index.
pub fn roulette_select<T: Scalar, R: RandomSource + ?Sized>(
    probabilities: &[T],
    rng: &mut R,
) -> usize {
    let u = T::lit(rng.unit_open());
    let mut cumulative = T::zero();
    for (i, &p) in probabilities.iter().enumerate() {
        cumulative += p;
        if u < cumulative {
            return i;
        }
    }
    probabilities.len() - 1
}
