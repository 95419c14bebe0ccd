use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rng::RandomSource;
use crate::scalar::{distance, Scalar};

type ObjectiveFn<T> = dyn Fn(&[T], &mut dyn RandomSource) -> T + Send + Sync;

/// A box-bounded minimization problem.
///
/// The objective is a pure function of the point, except for problems built
/// with [`Problem::new_noisy`], which may also draw from the random stream
/// handed to [`Problem::evaluate`].
#[derive(Clone)]
pub struct Problem<T> {
    name: String,
    lower: Vec<T>,
    upper: Vec<T>,
    objective: Arc<ObjectiveFn<T>>,
    noisy: bool,
    known_optimum: Option<T>,
    known_minimizer: Option<Vec<T>>,
}

impl<T: Scalar> Problem<T> {
    pub fn new<F>(
        name: impl Into<String>,
        lower: Vec<T>,
        upper: Vec<T>,
        objective: F,
    ) -> Result<Self>
    where
        F: Fn(&[T]) -> T + Send + Sync + 'static,
    {
        Self::build(
            name.into(),
            lower,
            upper,
            Arc::new(move |x, _| objective(x)),
            false,
        )
    }

    pub fn new_noisy<F>(
        name: impl Into<String>,
        lower: Vec<T>,
        upper: Vec<T>,
        objective: F,
    ) -> Result<Self>
    where
        F: Fn(&[T], &mut dyn RandomSource) -> T + Send + Sync + 'static,
    {
        Self::build(name.into(), lower, upper, Arc::new(objective), true)
    }

    /// Problem over the hypercube `[lo, hi]^dim`.
    pub fn hypercube<F>(
        name: impl Into<String>,
        dim: usize,
        lo: T,
        hi: T,
        objective: F,
    ) -> Result<Self>
    where
        F: Fn(&[T]) -> T + Send + Sync + 'static,
    {
        Self::new(name, vec![lo; dim], vec![hi; dim], objective)
    }

    fn build(
        name: String,
        lower: Vec<T>,
        upper: Vec<T>,
        objective: Arc<ObjectiveFn<T>>,
        noisy: bool,
    ) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                actual: upper.len(),
            });
        }
        if lower.is_empty() {
            return Err(Error::Config("problem dimension must be positive".into()));
        }
        for (index, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidBounds {
                    index,
                    lower: lo.as_f64(),
                    upper: hi.as_f64(),
                });
            }
        }
        Ok(Self {
            name,
            lower,
            upper,
            objective,
            noisy,
            known_optimum: None,
            known_minimizer: None,
        })
    }

    pub fn with_known_optimum(mut self, value: T, minimizer: Option<Vec<T>>) -> Result<Self> {
        if let Some(x) = &minimizer {
            self.check_dim(x)?;
        }
        self.known_optimum = Some(value);
        self.known_minimizer = minimizer;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn is_noisy(&self) -> bool {
        self.noisy
    }

    pub fn known_optimum(&self) -> Option<T> {
        self.known_optimum
    }

    pub fn known_minimizer(&self) -> Option<&[T]> {
        self.known_minimizer.as_deref()
    }

    /// Euclidean length of the bounding box diagonal.
    pub fn diagonal(&self) -> T {
        distance(&self.lower, &self.upper)
    }

    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&v, (&lo, &hi))| lo <= v && v <= hi)
    }

    pub(crate) fn check_dim(&self, x: &[T]) -> Result<()> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: x.len(),
            })
        }
    }

    /// Projects `x` onto the bounds, leaving in-range coordinates untouched.
    pub fn clamp(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_dim(x)?;
        let mut y = x.to_vec();
        self.clamp_in_place(&mut y);
        Ok(y)
    }

    pub(crate) fn clamp_in_place(&self, x: &mut [T]) {
        for ((v, &lo), &hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            // NaN coordinates fall through both comparisons; pin them low.
            if *v < lo || v.is_nan() {
                *v = lo;
            } else if *v > hi {
                *v = hi;
            }
        }
    }

    /// Uniform point in the sub-box `[lo, hi]` intersected with the bounds.
    pub(crate) fn sample_in_box<R: RandomSource + ?Sized>(
        &self,
        lo: &[T],
        hi: &[T],
        rng: &mut R,
    ) -> Vec<T> {
        let mut x: Vec<T> = lo
            .iter()
            .zip(hi)
            .zip(self.lower.iter().zip(&self.upper))
            .map(|((&a, &b), (&l, &u))| {
                let a = a.max(l).min(u);
                let b = b.min(u).max(a);
                T::lit(rng.uniform(a.as_f64(), b.as_f64()))
            })
            .collect();
        self.clamp_in_place(&mut x);
        x
    }

    /// Uniform point in the whole bounding box.
    pub(crate) fn sample_uniform<R: RandomSource + ?Sized>(&self, rng: &mut R) -> Vec<T> {
        self.sample_in_box(&self.lower, &self.upper, rng)
    }

    /// Evaluates the objective at `x`, counting the evaluation.
    ///
    /// A NaN or infinite value is reported as [`Error::NonFinite`]; such a
    /// value always points at a broken objective since `x` lies in a
    /// bounded box.
    pub fn evaluate<R: RandomSource>(
        &self,
        x: &[T],
        counter: &mut EvalCounter,
        rng: &mut R,
    ) -> Result<T> {
        self.check_dim(x)?;
        counter.tick();
        let value = (self.objective)(x, rng);
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::NonFinite {
                problem: self.name.clone(),
                value: value.as_f64(),
                point: x.iter().map(|v| v.as_f64()).collect(),
            })
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Problem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dim", &self.lower.len())
            .field("noisy", &self.noisy)
            .field("known_optimum", &self.known_optimum)
            .finish_non_exhaustive()
    }
}

pub fn clamp_to_bounds<T: Scalar>(x: &[T], problem: &Problem<T>) -> Result<Vec<T>> {
    problem.clamp(x)
}

pub fn evaluate<T: Scalar, R: RandomSource>(
    problem: &Problem<T>,
    x: &[T],
    counter: &mut EvalCounter,
    rng: &mut R,
) -> Result<T> {
    problem.evaluate(x, counter, rng)
}

/// Number of objective evaluations performed so far in one run.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct EvalCounter {
    count: u64,
}

impl EvalCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    fn tick(&mut self) {
        self.count += 1;
    }
}

/// Stopping rule for a run.
///
/// A run stops once any limit that is set has been hit. Evaluation limits
/// are enforced before each evaluation, so an optimizer never exceeds
/// `max_evaluations` (except for its initial population, which is always
/// evaluated in full).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Budget {
    pub max_cycles: Option<u64>,
    pub max_evaluations: Option<u64>,
    pub target_value: Option<f64>,
}

impl Budget {
    pub fn evaluations(max: u64) -> Self {
        Self {
            max_evaluations: Some(max),
            ..Self::default()
        }
    }

    pub fn cycles(max: u64) -> Self {
        Self {
            max_cycles: Some(max),
            ..Self::default()
        }
    }

    pub fn with_max_cycles(mut self, max: u64) -> Self {
        self.max_cycles = Some(max);
        self
    }

    pub fn with_target(mut self, target: f64) -> Self {
        self.target_value = Some(target);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_cycles.is_none() && self.max_evaluations.is_none() {
            return Err(Error::Config(
                "budget needs a cycle limit or an evaluation limit".into(),
            ));
        }
        if self.max_evaluations == Some(0) {
            return Err(Error::Config("evaluation limit must be positive".into()));
        }
        Ok(())
    }

    pub fn evaluations_left(&self, counter: &EvalCounter) -> bool {
        self.max_evaluations.is_none_or(|max| counter.count() < max)
    }

    /// Whether another cycle may start after `completed` cycles.
    pub fn allows_cycle(&self, completed: u64, counter: &EvalCounter, best: f64) -> bool {
        self.max_cycles.is_none_or(|max| completed < max)
            && self.evaluations_left(counter)
            && self.target_value.is_none_or(|target| best > target)
    }
}
