//! Lamé curves `|x/a|^p + |y/b|^p = 1`: least-squares fitting and area.

use serde::{Deserialize, Serialize};

use super::gamma::gamma_positive;
use super::nelder_mead::{nelder_mead, OptimizerSettings};
use crate::error::{QuasError, Result};

pub const A_MAX: f64 = 1.5;
pub const P_MIN: f64 = 0.1;
pub const P_MAX: f64 = 20.0;

/// Start point `(a, b, p)` of every fit.
pub const FIT_START: (f64, f64, f64) = (1.0, 1.0, 2.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LameFit {
    /// Semi-axis along the speed axis.
    pub a: f64,
    /// Semi-axis along the accuracy axis.
    pub b: f64,
    pub p: f64,
    pub residual: f64,
    pub points_used: usize,
}

/// Area enclosed by one quadrant of the Lamé curve:
/// `a·b·Γ(1 + 1/p)² / Γ(1 + 2/p)`.
pub fn quadrant_area(a: f64, b: f64, p: f64) -> Result<f64> {
    for (name, v) in [("a", a), ("b", b), ("p", p)] {
        if !v.is_finite() || v <= 0.0 {
            return Err(QuasError::Domain(format!("Lamé parameter {name} must be positive and finite, got {v}")));
        }
    }
    let g1 = gamma_positive(1.0 + 1.0 / p);
    Ok(a * b * g1 * g1 / gamma_positive(1.0 + 2.0 / p))
}

/// `Σ (|x/a|^p + |y/b|^p - 1)²` over the points.
pub fn lame_residual(points: &[(f64, f64)], a: f64, b: f64, p: f64) -> f64 {
    points
        .iter()
        .map(|&(x, y)| {
            let r = (x / a).abs().powf(p) + (y / b).abs().powf(p) - 1.0;
            r * r
        })
        .sum()
}

fn clamp_params(a: f64, b: f64, p: f64) -> (f64, f64, f64) {
    (a.min(A_MAX), b.min(A_MAX), p.clamp(P_MIN, P_MAX))
}

/// Fits `(a, b, p)` to at least two points.
///
/// The search runs in log-parameter space from [`FIT_START`], with the
/// parameter bounds applied inside the objective so the simplex never
/// profits from leaving them.
pub fn fit_lame(front: &[(f64, f64)]) -> Result<LameFit> {
    fit_lame_with(front, &fit_settings())
}

/// Default simplex settings (tol 1e-8, 500 iterations).
pub fn fit_settings() -> OptimizerSettings {
    OptimizerSettings::default()
}

pub fn fit_lame_with(front: &[(f64, f64)], settings: &OptimizerSettings) -> Result<LameFit> {
    if front.len() < 2 {
        return Err(QuasError::InsufficientData(format!(
            "Lamé fit needs at least 2 points, got {}",
            front.len()
        )));
    }
    let objective = |theta: &[f64]| {
        let (a, b, p) = clamp_params(theta[0].exp(), theta[1].exp(), theta[2].exp());
        lame_residual(front, a, b, p)
    };
    let (a0, b0, p0) = FIT_START;
    let theta = nelder_mead(objective, &[a0.ln(), b0.ln(), p0.ln()], settings)?.x;
    let (a, b, p) = clamp_params(theta[0].exp(), theta[1].exp(), theta[2].exp());
    Ok(LameFit { a, b, p, residual: lame_residual(front, a, b, p), points_used: front.len() })
}

/// The fit used when the front is a single point. On normalized data that
/// point is `(1, 1)`: it dominates every other measurement, and the curve
/// degenerates to the unit square, approximated at the largest allowed `p`.
pub fn dominant_corner_fit() -> LameFit {
    LameFit { a: 1.0, b: 1.0, p: P_MAX, residual: 0.0, points_used: 1 }
}

/// `samples` points along the quadrant from `(a, 0)` to `(0, b)`, each
/// satisfying the curve equation up to rounding. Endpoints are exact.
pub fn lame_polyline(a: f64, b: f64, p: f64, samples: usize) -> Vec<(f64, f64)> {
    let samples = samples.max(2);
    (0..samples)
        .map(|k| {
            let (c, s) = if k == 0 {
                (1.0, 0.0)
            } else if k == samples - 1 {
                (0.0, 1.0)
            } else {
                let t = std::f64::consts::FRAC_PI_2 * k as f64 / (samples - 1) as f64;
                (t.cos(), t.sin())
            };
            // |x/a|^p = cos², |y/b|^p = sin²
            (a * c.powf(2.0 / p), b * s.powf(2.0 / p))
        })
        .collect()
}
