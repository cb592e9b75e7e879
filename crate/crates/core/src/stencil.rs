//! Finite-difference stencils and quadrature on uniform grids.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

/// Values that finite differences can act on.
pub trait Field: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}

impl<T> Field for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

/// Second-order first derivative: central in the interior, one-sided
/// three-point at both ends.
///
/// Panics if fewer than three samples are given.
pub fn first_derivative<T: Field>(values: &[T], dx: f64) -> Vec<T> {
    let n = values.len();
    assert!(n >= 3, "first_derivative needs at least 3 samples, got {n}");
    let inv = 1.0 / (2.0 * dx);
    let mut out = Vec::with_capacity(n);
    out.push((values[1] * 4.0 - values[0] * 3.0 - values[2]) * inv);
    for i in 1..n - 1 {
        out.push((values[i + 1] - values[i - 1]) * inv);
    }
    out.push((values[n - 1] * 3.0 - values[n - 2] * 4.0 + values[n - 3]) * inv);
    out
}

/// Second-order second derivative at interior points `1..n-1`.
pub fn second_derivative_interior<T: Field>(values: &[T], dx: f64) -> Vec<T> {
    let inv = 1.0 / (dx * dx);
    values.windows(3).map(|w| (w[0] + w[2] - w[1] * 2.0) * inv).collect()
}

/// Central time derivative from three equally spaced samples.
pub fn central_time<T: Field>(before: T, after: T, dt: f64) -> T {
    (after - before) * (0.5 / dt)
}

/// Composite trapezoidal rule, summed left to right.
pub fn trapezoid(values: &[f64], dx: f64) -> f64 {
    match values.len() {
        0 | 1 => 0.0,
        n => {
            let inner: f64 = values[1..n - 1].iter().sum();
            dx * (inner + 0.5 * (values[0] + values[n - 1]))
        }
    }
}

/// Estimated order `log2(coarse/fine)` for a halving of the step.
pub fn observed_order(coarse: f64, fine: f64) -> f64 {
    (coarse / fine).log2()
}

/// `b - a` for complex logarithms, with the imaginary part wrapped into
/// `(-π, π]` so that phases need no global unwrapping.
pub fn log_diff(a: Complex64, b: Complex64) -> Complex64 {
    let d = b - a;
    let mut im = d.im % (2.0 * PI);
    if im > PI {
        im -= 2.0 * PI;
    } else if im <= -PI {
        im += 2.0 * PI;
    }
    Complex64::new(d.re, im)
}

/// [`first_derivative`] for sampled logarithms `ln ψ`.
pub fn log_first_derivative(logs: &[Complex64], dx: f64) -> Vec<Complex64> {
    let n = logs.len();
    assert!(n >= 3, "log_first_derivative needs at least 3 samples, got {n}");
    let inv = 1.0 / (2.0 * dx);
    let mut out = Vec::with_capacity(n);
    out.push((log_diff(logs[0], logs[1]) * 4.0 - log_diff(logs[0], logs[2])) * inv);
    for i in 1..n - 1 {
        out.push(log_diff(logs[i - 1], logs[i + 1]) * inv);
    }
    out.push((log_diff(logs[n - 2], logs[n - 1]) * 4.0 - log_diff(logs[n - 3], logs[n - 1])) * inv);
    out
}

/// Central first and second derivative of `ln ψ` at the middle of three samples.
pub fn log_central(prev: Complex64, mid: Complex64, next: Complex64, h: f64) -> (Complex64, Complex64) {
    let back = log_diff(prev, mid);
    let fwd = log_diff(mid, next);
    ((back + fwd) / (2.0 * h), (fwd - back) / (h * h))
}
