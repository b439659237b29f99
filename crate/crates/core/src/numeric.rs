//! Small numeric helpers: complex alias, tolerance comparisons, Perron vectors.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Default absolute tolerance for complex comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Iteration budget for power iteration.
pub const POWER_ITERATION_BUDGET: usize = 1_000_000;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn real(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn approx_eq(a: C64, b: C64, tol: f64) -> bool {
    let scale = 1f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

pub fn is_zero(a: C64, tol: f64) -> bool {
    a.norm() <= tol
}

/// Maximum absolute entry of a vector; `0.0` when empty.
pub fn max_abs(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Dense square integer matrix times real vector.
pub fn int_mat_vec(m: &[Vec<i64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&a, &x)| a as f64 * x).sum())
        .collect()
}

/// Perron eigenvector of a non-negative primitive integer matrix by power
/// iteration from the all-ones seed.
///
/// Stops once `‖A v − λ v‖∞ < 1e-12 · λ`, with `v` normalised to unit
/// max-norm. Returns `(λ, v)`.
pub fn perron_vector(a: &[Vec<i64>]) -> Result<(f64, Vec<f64>)> {
    let n = a.len();
    if n == 0 {
        return Err(Error::Structural("empty matrix".into()));
    }
    let mut v = vec![1.0; n];
    for _ in 0..POWER_ITERATION_BUDGET {
        let w = int_mat_vec(a, &v);
        let lambda = w.iter().cloned().fold(0.0, f64::max);
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::Numeric("power iteration collapsed to zero".into()));
        }
        let residual = w
            .iter()
            .zip(&v)
            .map(|(wi, vi)| (wi - lambda * vi).abs())
            .fold(0.0, f64::max);
        if residual < 1e-12 * lambda {
            return Ok((lambda, v));
        }
        v = w.into_iter().map(|x| x / lambda).collect();
    }
    Err(Error::Numeric(format!(
        "power iteration did not converge within {POWER_ITERATION_BUDGET} steps"
    )))
}

/// Round to 12 significant digits, mapping `-0.0` to `0.0`.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}
