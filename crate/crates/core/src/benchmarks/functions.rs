//! Objective functions, each written once over any [`Scalar`].
//!
//! Formulas follow the classical global-optimization test suite (the same
//! definitions as Yao, Liu & Lin 1999 and the Dixon-Szegő set).

use std::f64::consts::{E, PI};

use crate::rng::RandomSource;
use crate::scalar::Scalar;

fn c<T: Scalar>(v: f64) -> T {
    T::lit(v)
}

/// `Σ x_i²`. Minimum 0 at the origin.
pub fn sphere<T: Scalar>(x: &[T]) -> T {
    x.iter().map(|&v| v * v).sum()
}

/// `10 D + Σ (x_i² − 10 cos 2π x_i)`. Minimum 0 at the origin.
pub fn rastrigin<T: Scalar>(x: &[T]) -> T {
    let two_pi = c::<T>(2.0 * PI);
    let ten = c::<T>(10.0);
    ten * T::lit(x.len() as f64)
        + x.iter()
            .map(|&v| v * v - ten * (two_pi * v).cos())
            .sum::<T>()
}

/// `Σ_{i<D} 100 (x_{i+1} − x_i²)² + (1 − x_i)²`. Minimum 0 at all ones.
pub fn rosenbrock<T: Scalar>(x: &[T]) -> T {
    x.windows(2)
        .map(|w| {
            let a = w[1] - w[0] * w[0];
            let b = T::one() - w[0];
            c::<T>(100.0) * a * a + b * b
        })
        .sum()
}

/// `1 + Σ x_i² / 4000 − Π cos(x_i / √i)`. Minimum 0 at the origin.
pub fn griewank<T: Scalar>(x: &[T]) -> T {
    let sum: T = x.iter().map(|&v| v * v).sum::<T>() / c(4000.0);
    let prod = x.iter().enumerate().fold(T::one(), |acc, (i, &v)| {
        acc * (v / T::lit((i + 1) as f64).sqrt()).cos()
    });
    T::one() + sum - prod
}

/// `−20 exp(−0.2 √(Σ x_i² / D)) − exp(Σ cos(2π x_i) / D) + 20 + e`.
/// Minimum 0 at the origin.
pub fn ackley<T: Scalar>(x: &[T]) -> T {
    let n = T::lit(x.len() as f64);
    let squares: T = x.iter().map(|&v| v * v).sum::<T>() / n;
    let cosines: T = x.iter().map(|&v| (c::<T>(2.0 * PI) * v).cos()).sum::<T>() / n;
    c::<T>(-20.0) * (c::<T>(-0.2) * squares.sqrt()).exp() - cosines.exp() + c(20.0) + c(E)
}

/// Schwefel 2.26: `−Σ x_i sin(√|x_i|)`. Minimum −418.9829 D at
/// `x_i = 420.9687`.
pub fn schwefel_226<T: Scalar>(x: &[T]) -> T {
    -x.iter().map(|&v| v * v.abs().sqrt().sin()).sum::<T>()
}

/// Noise-free part of the quartic function: `Σ i x_i⁴` (1-based `i`).
pub fn quartic<T: Scalar>(x: &[T]) -> T {
    x.iter()
        .enumerate()
        .map(|(i, &v)| T::lit((i + 1) as f64) * v.powi(4))
        .sum()
}

/// Quartic plus a uniform (0, 1) draw from `rng`.
pub fn quartic_noisy<T: Scalar>(x: &[T], rng: &mut dyn RandomSource) -> T {
    quartic(x) + T::lit(rng.unit_open())
}

/// Branin RCOS on `[−5, 10] × [0, 15]`. Minimum 0.397887 at (−π, 12.275),
/// (π, 2.275) and (9.42478, 2.475).
pub fn branin<T: Scalar>(x: &[T]) -> T {
    let b = 5.1 / (4.0 * PI * PI);
    let cc = 5.0 / PI;
    let t = 1.0 / (8.0 * PI);
    let (x1, x2) = (x[0], x[1]);
    let a = x2 - c::<T>(b) * x1 * x1 + c::<T>(cc) * x1 - c(6.0);
    a * a + c::<T>(10.0 * (1.0 - t)) * x1.cos() + c(10.0)
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

/// Kowalik: `Σ (a_i − x1 (b_i² + b_i x2) / (b_i² + b_i x3 + x4))²`.
/// Minimum ≈ 3.0749e-4 at (0.192833, 0.190836, 0.123117, 0.135766).
pub fn kowalik<T: Scalar>(x: &[T]) -> T {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_B_INV)
        .map(|(&a, b_inv)| {
            let b = c::<T>(1.0 / b_inv);
            let r = c::<T>(a) - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            r * r
        })
        .sum()
}

const SHEKEL_C: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_BETA: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// Shekel with `m` foxholes on `[0, 10]^4`:
/// `−Σ_{i≤m} 1 / (Σ_j (x_j − C_ij)² + β_i)`.
pub fn shekel<T: Scalar>(x: &[T], m: usize) -> T {
    -SHEKEL_C[..m]
        .iter()
        .zip(SHEKEL_BETA)
        .map(|(row, beta)| {
            let d: T = row
                .iter()
                .zip(x)
                .map(|(&cij, &xj)| (xj - c::<T>(cij)).powi(2))
                .sum();
            T::one() / (d + c(beta))
        })
        .sum::<T>()
}

const HARTMAN_ALPHA: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.0381, 0.5743, 0.8828],
];
const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartman<T: Scalar, const D: usize>(x: &[T], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> T {
    -HARTMAN_ALPHA
        .iter()
        .zip(a.iter().zip(p))
        .map(|(&alpha, (ai, pi))| {
            let inner: T = (0..D)
                .map(|j| c::<T>(ai[j]) * (x[j] - c::<T>(pi[j])).powi(2))
                .sum();
            c::<T>(alpha) * (-inner).exp()
        })
        .sum::<T>()
}

/// Hartman 3-D on `[0, 1]^3`. Minimum −3.86278.
pub fn hartman3<T: Scalar>(x: &[T]) -> T {
    hartman(x, &HARTMAN3_A, &HARTMAN3_P)
}

/// Hartman 6-D on `[0, 1]^6`. Minimum −3.32237.
pub fn hartman6<T: Scalar>(x: &[T]) -> T {
    hartman(x, &HARTMAN6_A, &HARTMAN6_P)
}
