//! The twenty-function benchmark set (F01–F20) behind the [`Problem`]
//! interface, plus constructors for the individual function families at
//! any dimension.

pub mod functions;

use crate::error::{Error, Result};
use crate::problem::{EvalCounter, Problem};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

/// One entry of the benchmark set.
#[derive(Debug, Clone)]
pub struct BenchmarkEntry<T> {
    /// `F01` … `F20`.
    pub id: &'static str,
    /// Lower-case name usable in place of the id, e.g. `rastrigin10`.
    pub alias: &'static str,
    pub problem: Problem<T>,
    /// Mean best value PeSOA reached on this function in the original
    /// ten-run benchmark study.
    pub published_best: f64,
    /// Standard deviation accompanying `published_best`.
    pub published_std: f64,
    /// True global minimum from the test-function literature.
    pub reference_optimum: f64,
    /// Known mismatch between the published value and the definition used
    /// here, if any.
    pub discrepancy: Option<&'static str>,
}

impl<T: Scalar> BenchmarkEntry<T> {
    pub fn eval<R: RandomSource>(
        &self,
        x: &[T],
        counter: &mut EvalCounter,
        rng: &mut R,
    ) -> Result<T> {
        self.problem.evaluate(x, counter, rng)
    }
}

fn hypercube<T: Scalar>(name: &str, dim: usize, bound: f64, f: fn(&[T]) -> T) -> Problem<T> {
    Problem::hypercube(name, dim, T::lit(-bound), T::lit(bound), f).expect("valid benchmark bounds")
}

fn lits<T: Scalar>(xs: &[f64]) -> Vec<T> {
    xs.iter().map(|&v| T::lit(v)).collect()
}

fn with_optimum<T: Scalar>(p: Problem<T>, value: f64, minimizer: Vec<f64>) -> Problem<T> {
    p.with_known_optimum(T::lit(value), Some(lits(&minimizer)))
        .expect("minimizer matches dimension")
}

/// Sphere on `[−100, 100]^dim`.
pub fn sphere<T: Scalar>(dim: usize) -> Problem<T> {
    with_optimum(
        hypercube(&format!("sphere{dim}"), dim, 100.0, functions::sphere),
        0.0,
        vec![0.0; dim],
    )
}

/// Rastrigin on `[−5.12, 5.12]^dim`.
pub fn rastrigin<T: Scalar>(dim: usize) -> Problem<T> {
    with_optimum(
        hypercube(&format!("rastrigin{dim}"), dim, 5.12, functions::rastrigin),
        0.0,
        vec![0.0; dim],
    )
}

/// Rosenbrock on `[−30, 30]^dim`.
pub fn rosenbrock<T: Scalar>(dim: usize) -> Problem<T> {
    with_optimum(
        hypercube(
            &format!("rosenbrock{dim}"),
            dim,
            30.0,
            functions::rosenbrock,
        ),
        0.0,
        vec![1.0; dim],
    )
}

/// Griewank on `[−600, 600]^dim`.
pub fn griewank<T: Scalar>(dim: usize) -> Problem<T> {
    with_optimum(
        hypercube(&format!("griewank{dim}"), dim, 600.0, functions::griewank),
        0.0,
        vec![0.0; dim],
    )
}

/// Ackley on `[−32.768, 32.768]^dim`.
pub fn ackley<T: Scalar>(dim: usize) -> Problem<T> {
    with_optimum(
        hypercube(&format!("ackley{dim}"), dim, 32.768, functions::ackley),
        0.0,
        vec![0.0; dim],
    )
}

pub const SCHWEFEL_MINIMIZER: f64 = 420.968_746_576_449_2;
/// Per-coordinate minimum of Schwefel 2.26.
pub const SCHWEFEL_MIN_PER_DIM: f64 = -418.982_887_272_433_8;

/// Schwefel 2.26 on `[−500, 500]^dim`.
pub fn schwefel_226<T: Scalar>(dim: usize) -> Problem<T> {
    with_optimum(
        hypercube(
            &format!("schwefel{dim}"),
            dim,
            500.0,
            functions::schwefel_226,
        ),
        SCHWEFEL_MIN_PER_DIM * dim as f64,
        vec![SCHWEFEL_MINIMIZER; dim],
    )
}

/// Quartic with uniform (0, 1) noise on `[−1.28, 1.28]^dim`. The known
/// optimum (0 at the origin) is that of the noise-free part.
pub fn quartic_noisy<T: Scalar>(dim: usize) -> Problem<T> {
    Problem::new_noisy(
        format!("quartic{dim}"),
        vec![T::lit(-1.28); dim],
        vec![T::lit(1.28); dim],
        |x: &[T], rng: &mut dyn RandomSource| functions::quartic_noisy(x, rng),
    )
    .and_then(|p| p.with_known_optimum(T::zero(), Some(vec![T::zero(); dim])))
    .expect("valid benchmark bounds")
}

pub fn branin<T: Scalar>() -> Problem<T> {
    let p = Problem::new(
        "branin",
        lits(&[-5.0, 0.0]),
        lits(&[10.0, 15.0]),
        functions::branin::<T>,
    )
    .expect("valid benchmark bounds");
    with_optimum(
        p,
        0.397_887_357_729_738_2,
        vec![std::f64::consts::PI, 2.275],
    )
}

pub fn kowalik<T: Scalar>() -> Problem<T> {
    let p = Problem::hypercube(
        "kowalik",
        4,
        T::lit(-5.0),
        T::lit(5.0),
        functions::kowalik::<T>,
    )
    .expect("valid benchmark bounds");
    with_optimum(
        p,
        3.074_859_878_056_061e-4,
        vec![
            0.192_833_453_122_007_2,
            0.190_836_247_440_423_2,
            0.123_117_301_386_243_4,
            0.135_765_993_052_928_2,
        ],
    )
}

/// Shekel with `m` ∈ {5, 7, 10} foxholes on `[0, 10]^4`.
pub fn shekel<T: Scalar>(m: usize) -> Problem<T> {
    let (value, minimizer) = match m {
        5 => (
            -10.153_199_679_058_23,
            [
                4.000_037_152_376_549,
                4.000_133_278_657_566,
                4.000_037_151_057_555,
                4.000_133_277_090_425,
            ],
        ),
        7 => (
            -10.402_940_566_818_66,
            [
                4.000_572_914_277_084,
                4.000_689_366_040_889,
                3.999_489_710_793_845,
                3.999_606_160_006_792,
            ],
        ),
        10 => (
            -10.536_409_816_692_05,
            [
                4.000_746_530_253_313,
                4.000_592_936_779_709,
                3.999_663_395_771_479,
                3.999_509_799_329_998,
            ],
        ),
        _ => panic!("Shekel is defined for m = 5, 7 or 10, got {m}"),
    };
    let f: fn(&[T]) -> T = match m {
        5 => |x| functions::shekel(x, 5),
        7 => |x| functions::shekel(x, 7),
        _ => |x| functions::shekel(x, 10),
    };
    let p = Problem::hypercube(format!("shekel{m}"), 4, T::zero(), T::lit(10.0), f)
        .expect("valid benchmark bounds");
    with_optimum(p, value, minimizer.to_vec())
}

pub fn hartman3<T: Scalar>() -> Problem<T> {
    let p = Problem::hypercube("hartman3", 3, T::zero(), T::one(), functions::hartman3::<T>)
        .expect("valid benchmark bounds");
    with_optimum(
        p,
        -3.862_779_787_332_663,
        vec![
            0.114_588_881_225_412_9,
            0.555_648_895_473_937_1,
            0.852_546_984_217_274_6,
        ],
    )
}

pub fn hartman6<T: Scalar>() -> Problem<T> {
    let p = Problem::hypercube("hartman6", 6, T::zero(), T::one(), functions::hartman6::<T>)
        .expect("valid benchmark bounds");
    with_optimum(
        p,
        -3.322_368_011_415_515,
        vec![
            0.201_689_509_093_657_5,
            0.150_010_693_541_113_7,
            0.476_873_972_925_099_8,
            0.275_332_427_522_078_2,
            0.311_651_617_239_568_6,
            0.657_300_534_553_670_2,
        ],
    )
}

/// All twenty entries in id order.
pub fn registry<T: Scalar>() -> Vec<BenchmarkEntry<T>> {
    let entry = |id, alias, problem: Problem<T>, published_best, published_std, discrepancy| {
        let reference_optimum = problem
            .known_optimum()
            .expect("benchmarks carry an optimum")
            .as_f64();
        BenchmarkEntry {
            id,
            alias,
            problem,
            published_best,
            published_std,
            reference_optimum,
            discrepancy,
        }
    };
    vec![
        entry("F01", "hartman3", hartman3(), -3.8597, 1.1027e-4, None),
        entry("F02", "hartman6", hartman6(), -3.3194, 1.08e-3, None),
        entry(
            "F03",
            "kowalik",
            kowalik(),
            -3.008e-4,
            3e-8,
            Some("published value is negative while the Kowalik sum of squares is non-negative"),
        ),
        entry("F04", "shekel5", shekel(5), -10.1508, 1.0214e-3, None),
        entry("F05", "shekel7", shekel(7), -10.3867, 3.10247e-3, None),
        entry("F06", "shekel10", shekel(10), -10.5104, 3.1027e-3, None),
        entry(
            "F07",
            "branin",
            branin(),
            0.38794,
            3.2768e-2,
            Some("published mean lies below the true minimum 0.397887"),
        ),
        entry(
            "F08",
            "ackley",
            ackley(30),
            1.0001e-5,
            1.0067e-6,
            Some("dimension unstated; 30 used"),
        ),
        entry("F09", "griewank10", griewank(10), 3.6874e-7, 3.29e-10, None),
        entry("F10", "griewank20", griewank(20), 5.9998e-7, 1.4e-10, None),
        entry("F11", "griewank30", griewank(30), 9.7238e-7, 1.03e-10, None),
        entry(
            "F12",
            "quartic",
            quartic_noisy(30),
            1.00859,
            2.15e-5,
            Some("dimension unstated; 30 used"),
        ),
        entry(
            "F13",
            "rastrigin10",
            rastrigin(10),
            3.0678e-8,
            3.8e-12,
            None,
        ),
        entry(
            "F14",
            "rastrigin20",
            rastrigin(20),
            5.0101e-8,
            1.934e-9,
            None,
        ),
        entry(
            "F15",
            "rastrigin30",
            rastrigin(30),
            5.9887e-8,
            1.027e-10,
            Some("listed as a second Rastrigin 20; implemented at dimension 30"),
        ),
        entry(
            "F16",
            "rosenbrock10",
            rosenbrock(10),
            6.16587e-10,
            2.0374e-9,
            None,
        ),
        entry(
            "F17",
            "rosenbrock20",
            rosenbrock(20),
            1.0064e-9,
            4.91e-12,
            None,
        ),
        entry(
            "F18",
            "rosenbrock30",
            rosenbrock(30),
            9.012e-10,
            2.48e-11,
            None,
        ),
        entry(
            "F19",
            "schwefel",
            schwefel_226(30),
            -9.6254e3,
            1.3756e-2,
            Some("dimension unstated; the published value matches no standard dimension, 30 used"),
        ),
        entry(
            "F20",
            "sphere",
            sphere(30),
            5.4237e-6,
            2.1038e-9,
            Some("dimension unstated; 30 used"),
        ),
    ]
}

/// Looks an entry up by id (`F13`, `f13`, `13`) or alias (`rastrigin10`).
pub fn lookup<T: Scalar>(key: &str) -> Result<BenchmarkEntry<T>> {
    let wanted = normalize(key);
    registry()
        .into_iter()
        .find(|e| normalize(e.id) == wanted || e.alias == wanted)
        .ok_or_else(|| Error::UnknownBenchmark(key.to_string()))
}

/// Resolves a comma separated list of ids or aliases; `all` selects the
/// whole registry.
pub fn resolve_list<T: Scalar>(spec: &str) -> Result<Vec<BenchmarkEntry<T>>> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(registry());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(lookup)
        .collect::<Result<Vec<_>>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(Error::UnknownBenchmark(spec.to_string()))
            } else {
                Ok(v)
            }
        })
}

fn normalize(key: &str) -> String {
    let k = key.trim().to_ascii_lowercase();
    let digits = k.strip_prefix('f').unwrap_or(&k);
    match digits.parse::<u32>() {
        Ok(n) => format!("f{n:02}"),
        Err(_) => k,
    }
}

/// Evaluates entry `id` at `x`.
pub fn eval_entry<T: Scalar, R: RandomSource>(
    id: &str,
    x: &[T],
    counter: &mut EvalCounter,
    rng: &mut R,
) -> Result<T> {
    lookup::<T>(id)?.eval(x, counter, rng)
}
