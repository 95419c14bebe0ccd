use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::RandomSource;
use crate::scalar::{distance, Scalar};

/// Attempts per center before the separation threshold is relaxed.
const ATTEMPTS_PER_THRESHOLD: usize = 1000;
const RELAXATION_FACTOR: f64 = 0.9;
/// Absolute floor on the threshold, relative to the box diagonal.
const DIAGONAL_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct RegionLayout<T> {
    pub centers: Vec<Vec<T>>,
    /// Separation that every pair of centers exceeds. Equal to the requested
    /// separation unless placement had to relax it.
    pub threshold: T,
    pub relaxed: bool,
}

/// Places `k` region centers uniformly at random, each further than
/// `max_dist` from all previous ones.
///
/// After 1000 failed draws for one center the threshold is multiplied by
/// 0.9 and placement continues. Placement fails once the threshold would
/// fall below `min_relaxation * max_dist` or `1e-6` times the box diagonal.
pub fn generate_regions<T: Scalar, R: RandomSource + ?Sized>(
    problem: &Problem<T>,
    k: usize,
    max_dist: f64,
    min_relaxation: f64,
    rng: &mut R,
) -> Result<RegionLayout<T>> {
    if k == 0 {
        return Err(Error::Config("number of groups must be at least 1".into()));
    }
    if !(max_dist.is_finite() && max_dist > 0.0) {
        return Err(Error::Config(format!(
            "max_dist must be positive, got {max_dist}"
        )));
    }
    let floor = (DIAGONAL_FLOOR * problem.diagonal().as_f64()).max(min_relaxation * max_dist);
    let mut threshold = max_dist;
    let mut centers = Vec::with_capacity(k);
    centers.push(problem.sample_uniform(rng));

    while centers.len() < k {
        let mut attempts = 0;
        loop {
            let candidate = problem.sample_uniform(rng);
            let limit = T::lit(threshold);
            if centers.iter().all(|c| distance(c, &candidate) > limit) {
                centers.push(candidate);
                break;
            }
            attempts += 1;
            if attempts == ATTEMPTS_PER_THRESHOLD {
                attempts = 0;
                threshold *= RELAXATION_FACTOR;
                if threshold < floor {
                    return Err(Error::RegionPlacement {
                        requested: k,
                        placed: centers.len(),
                        floor,
                    });
                }
            }
        }
    }

    Ok(RegionLayout {
        centers,
        threshold: T::lit(threshold),
        relaxed: threshold < max_dist,
    })
}
