//! Derivative-free simplex minimization.

use serde::{Deserialize, Serialize};

use crate::error::{QuasError, Result};

const REFLECTION: f64 = 1.0;
const EXPANSION: f64 = 2.0;
const CONTRACTION: f64 = 0.5;
const SHRINK: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerSettings {
    pub max_iter: usize,
    /// Optional cap on objective evaluations, including the initial simplex.
    pub max_evals: Option<usize>,
    /// Stop once `f(worst) - f(best)` over the simplex falls below this...
    pub tol: f64,
    /// ...and every vertex lies within this distance (max-norm) of the best.
    pub x_tol: f64,
    /// Offset of each initial simplex vertex from the start point.
    pub initial_step: f64,
}

impl Default for OptimizerSettings {
    fn default() -> Self {
        OptimizerSettings { max_iter: 500, max_evals: None, tol: 1e-8, x_tol: 1e-6, initial_step: 0.1 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
}

/// Minimizes `objective` starting from `start`.
///
/// Non-finite values after initialization are treated as `+∞`, so the
/// simplex moves away from them.
pub fn nelder_mead<F>(mut objective: F, start: &[f64], settings: &OptimizerSettings) -> Result<Minimum>
where
    F: FnMut(&[f64]) -> f64,
{
    let n = start.len();
    if n == 0 {
        return Err(QuasError::OptimizerInit("empty start vector".into()));
    }
    let mut evals = 0usize;
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut x = start.to_vec();
        if k > 0 {
            x[k - 1] += settings.initial_step;
        }
        let fx = objective(&x);
        evals += 1;
        if !fx.is_finite() {
            return Err(QuasError::OptimizerInit(format!("objective is {fx} at initial vertex {x:?}")));
        }
        simplex.push((x, fx));
    }
    let budget_left = |evals: usize| settings.max_evals.is_none_or(|m| evals < m);
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = objective(x);
        if v.is_finite() { v } else { f64::INFINITY }
    };

    let mut iterations = 0;
    let mut converged = false;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let x_spread = simplex[1..]
            .iter()
            .flat_map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if simplex[n].1 - simplex[0].1 < settings.tol && x_spread <= settings.x_tol {
            converged = true;
            break;
        }
        if iterations >= settings.max_iter || !budget_left(evals) {
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / n as f64;
            }
        }
        let along = |t: f64, from: &[f64]| -> Vec<f64> {
            centroid.iter().zip(from).map(|(c, x)| c + t * (x - c)).collect()
        };
        let worst = simplex[n].clone();
        let reflected = along(-REFLECTION, &worst.0);
        let f_reflected = eval(&reflected, &mut evals);

        if f_reflected < simplex[0].1 {
            if !budget_left(evals) {
                simplex[n] = (reflected, f_reflected);
                continue;
            }
            let expanded = along(-REFLECTION * EXPANSION, &worst.0);
            let f_expanded = eval(&expanded, &mut evals);
            simplex[n] = if f_expanded < f_reflected { (expanded, f_expanded) } else { (reflected, f_reflected) };
        } else if f_reflected < simplex[n - 1].1 {
            simplex[n] = (reflected, f_reflected);
        } else {
            if !budget_left(evals) {
                continue;
            }
            let (contracted, accept_below) = if f_reflected < worst.1 {
                (along(-REFLECTION * CONTRACTION, &worst.0), f_reflected)
            } else {
                (along(CONTRACTION, &worst.0), worst.1)
            };
            let f_contracted = eval(&contracted, &mut evals);
            if f_contracted <= accept_below {
                simplex[n] = (contracted, f_contracted);
            } else {
                let best = simplex[0].0.clone();
                for vertex in simplex.iter_mut().skip(1) {
                    if !budget_left(evals) {
                        break;
                    }
                    let x: Vec<f64> = best.iter().zip(&vertex.0).map(|(b, v)| b + SHRINK * (v - b)).collect();
                    let fx = eval(&x, &mut evals);
                    *vertex = (x, fx);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, value) = simplex.swap_remove(0);
    Ok(Minimum { x, value, iterations, evaluations: evals, converged })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_bowl() {
        let m = nelder_mead(|x| (x[0] - 3.0).powi(2), &[0.0], &OptimizerSettings::default()).unwrap();
        assert!((m.x[0] - 3.0).abs() < 1e-4, "{:?}", m);
        assert!(m.converged);
    }

    #[test]
    fn two_dimensional_bowl() {
        let m = nelder_mead(|x| x[0] * x[0] + x[1] * x[1], &[1.0, 1.0], &OptimizerSettings::default()).unwrap();
        assert!(m.x[0].abs() < 1e-4 && m.x[1].abs() < 1e-4, "{:?}", m);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = nelder_mead(f, &[-1.2, 1.0], &OptimizerSettings::default()).unwrap();
        assert!(m.value < 1e-6, "{:?}", m);
        assert!(m.iterations <= 500);
    }

    #[test]
    fn evaluation_cap_is_respected() {
        let settings = OptimizerSettings { max_evals: Some(25), ..Default::default() };
        let mut count = 0;
        let m = nelder_mead(
            |x| {
                count += 1;
                (x[0] - 1.0).powi(2) + (x[1] + 2.0).powi(2) + x[2].powi(4)
            },
            &[5.0, 5.0, 5.0],
            &settings,
        )
        .unwrap();
        assert_eq!(m.evaluations, count);
        assert!(count <= 25, "{count} evaluations");
    }

    #[test]
    fn constant_objective_terminates() {
        let settings = OptimizerSettings::default();
        let m = nelder_mead(|_| 0.0, &[0.5, 0.5], &settings).unwrap();
        assert_eq!(m.value, 0.0);
        assert!(m.iterations <= settings.max_iter);
    }

    #[test]
    fn non_finite_start_is_rejected() {
        let err = nelder_mead(|x| if x[0] == 0.0 { f64::NAN } else { 1.0 }, &[0.0], &OptimizerSettings::default());
        assert!(matches!(err, Err(QuasError::OptimizerInit(_))));
        assert!(nelder_mead(|_| 0.0, &[], &OptimizerSettings::default()).is_err());
    }

    #[test]
    fn non_finite_regions_are_avoided() {
        let f = |x: &[f64]| if x[0] < 0.0 { f64::INFINITY } else { (x[0] - 0.5).powi(2) };
        let m = nelder_mead(f, &[0.05], &OptimizerSettings::default()).unwrap();
        assert!((m.x[0] - 0.5).abs() < 1e-3);
    }
}
