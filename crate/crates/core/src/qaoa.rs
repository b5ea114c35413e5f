//! Statevector QAOA over diagonal cost operators.
//!
//! The cost operator is the QUBO objective evaluated on every basis
//! state, so any problem reduced to QUBO can be simulated. Angles are
//! optimized with Nelder-Mead on the exact expectation value; shots are
//! drawn only from the final state.

use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::backends::{floor_elapsed, Backend, SolveOutcome, SolveRequest};
use crate::error::{QuasError, Result};
use crate::problems::{Candidate, QuboForm};
use crate::scoring::{nelder_mead, OptimizerSettings};
use crate::seed::{derive_seed, rng_from_seed};

pub const DEFAULT_MAX_QUBITS: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|z⟩`; bit `i` of `z` is qubit `i`.
    pub fn basis(n_qubits: usize, z: usize, cap: usize) -> Result<Self> {
        check_capacity(n_qubits, cap)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[z] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n_qubits, amplitudes })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Draws `shots` basis states from `|amplitude|²`.
    pub fn sample(&self, shots: usize, rng: &mut impl Rng) -> Vec<usize> {
        let mut cdf = Vec::with_capacity(self.amplitudes.len());
        let mut acc = 0.0;
        for a in &self.amplitudes {
            acc += a.norm_sqr();
            cdf.push(acc);
        }
        let last = self.amplitudes.len() - 1;
        (0..shots)
            .map(|_| {
                let u = rng.gen::<f64>() * acc;
                cdf.partition_point(|&c| c <= u).min(last)
            })
            .collect()
    }

    fn apply_phase(&mut self, cost: &DiagonalCost, gamma: f64) {
        for (a, &c) in self.amplitudes.iter_mut().zip(&cost.values) {
            *a *= Complex64::from_polar(1.0, -gamma * c);
        }
    }

    /// `exp(-iβX)` on every qubit.
    fn apply_mixer(&mut self, beta: f64) {
        let (s, c) = beta.sin_cos();
        let minus_i_s = Complex64::new(0.0, -s);
        for q in 0..self.n_qubits {
            let bit = 1usize << q;
            for z in 0..self.amplitudes.len() {
                if z & bit == 0 {
                    let a0 = self.amplitudes[z];
                    let a1 = self.amplitudes[z | bit];
                    self.amplitudes[z] = a0 * c + a1 * minus_i_s;
                    self.amplitudes[z | bit] = a0 * minus_i_s + a1 * c;
                }
            }
        }
    }
}

fn check_capacity(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(QuasError::Capacity { requested: n, cap });
    }
    if n == 0 {
        return Err(QuasError::InvalidSize("statevector needs at least one qubit".into()));
    }
    Ok(())
}

/// Uniform superposition `|+⟩^⊗n`.
pub fn prepare_plus_state(n: usize, cap: usize) -> Result<StateVector> {
    check_capacity(n, cap)?;
    let dim = 1usize << n;
    let amp = Complex64::new((dim as f64).powf(-0.5), 0.0);
    Ok(StateVector { n_qubits: n, amplitudes: vec![amp; dim] })
}

/// QUBO objective on every basis state.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalCost {
    pub values: Vec<f64>,
}

impl DiagonalCost {
    pub fn from_qubo(qubo: &QuboForm, cap: usize) -> Result<Self> {
        check_capacity(qubo.m, cap)?;
        let neighbors = qubo.neighbors();
        let dim = 1usize << qubo.m;
        let mut values = vec![0.0; dim];
        values[0] = qubo.constant;
        // add the lowest set bit i to the already-evaluated z without it
        for z in 1..dim {
            let i = z.trailing_zeros() as usize;
            let rest = z & (z - 1);
            let coupling: f64 = neighbors[i].iter().filter(|(j, _)| rest >> j & 1 == 1).map(|(_, q)| q).sum();
            values[z] = values[rest] + qubo.linear[i] + coupling;
        }
        Ok(DiagonalCost { values })
    }

    pub fn n_qubits(&self) -> usize {
        self.values.len().trailing_zeros() as usize
    }
}

fn check_dims(state: &StateVector, cost: &DiagonalCost) -> Result<()> {
    if state.amplitudes.len() != cost.values.len() {
        return Err(QuasError::Shape(format!(
            "state has dimension {}, cost has {}",
            state.amplitudes.len(),
            cost.values.len()
        )));
    }
    Ok(())
}

/// One QAOA layer: phase `exp(-iγC)` followed by the transverse mixer.
pub fn evolve_layer(state: &StateVector, cost: &DiagonalCost, gamma: f64, beta: f64) -> Result<StateVector> {
    check_dims(state, cost)?;
    let mut out = state.clone();
    out.apply_phase(cost, gamma);
    out.apply_mixer(beta);
    Ok(out)
}

/// `Σ_z |amplitude_z|² · cost_z`.
pub fn expectation(state: &StateVector, cost: &DiagonalCost) -> Result<f64> {
    check_dims(state, cost)?;
    Ok(state.amplitudes.iter().zip(&cost.values).map(|(a, c)| a.norm_sqr() * c).sum())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QaoaParams {
    pub gammas: Vec<f64>,
    pub betas: Vec<f64>,
}

impl QaoaParams {
    pub fn new(gammas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        if gammas.is_empty() || gammas.len() != betas.len() {
            return Err(QuasError::Shape(format!(
                "need equal, nonzero numbers of angles, got {} gammas and {} betas",
                gammas.len(),
                betas.len()
            )));
        }
        Ok(QaoaParams { gammas, betas })
    }

    pub fn layers(&self) -> usize {
        self.gammas.len()
    }

    fn from_flat(flat: &[f64]) -> Self {
        let p = flat.len() / 2;
        QaoaParams { gammas: flat[..p].to_vec(), betas: flat[p..].to_vec() }
    }
}

/// Plus state evolved through every layer of `params`.
pub fn qaoa_state(cost: &DiagonalCost, params: &QaoaParams) -> Result<StateVector> {
    let mut state = prepare_plus_state(cost.n_qubits(), cost.n_qubits())?;
    for (&g, &b) in params.gammas.iter().zip(&params.betas) {
        state.apply_phase(cost, g);
        state.apply_mixer(b);
    }
    Ok(state)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QaoaSettings {
    pub layers: usize,
    pub max_qubits: usize,
    /// Starting `(gamma, beta)` for every layer.
    pub start: (f64, f64),
    pub optimizer: OptimizerSettings,
}

impl Default for QaoaSettings {
    fn default() -> Self {
        QaoaSettings {
            layers: 1,
            max_qubits: DEFAULT_MAX_QUBITS,
            start: (0.5, 0.5),
            optimizer: OptimizerSettings { max_evals: Some(200), ..OptimizerSettings::default() },
        }
    }
}

/// Optimized angles and the resulting exact expectation.
#[derive(Debug, Clone, PartialEq)]
pub struct QaoaOptimum {
    pub params: QaoaParams,
    pub expectation: f64,
    pub evaluations: usize,
}

/// Optimizes the angles on the exact expectation, best in the QUBO's direction.
pub fn optimize_angles(qubo: &QuboForm, cost: &DiagonalCost, settings: &QaoaSettings) -> Result<QaoaOptimum> {
    if settings.layers < 1 {
        return Err(QuasError::Config("QAOA needs at least one layer".into()));
    }
    let sign = qubo.direction.energy_sign();
    let start: Vec<f64> = std::iter::repeat_n(settings.start.0, settings.layers)
        .chain(std::iter::repeat_n(settings.start.1, settings.layers))
        .collect();
    let objective = |flat: &[f64]| {
        let params = QaoaParams::from_flat(flat);
        qaoa_state(cost, &params).and_then(|s| expectation(&s, cost)).map_or(f64::INFINITY, |e| sign * e)
    };
    let min = nelder_mead(objective, &start, &settings.optimizer)?;
    Ok(QaoaOptimum { params: QaoaParams::from_flat(&min.x), expectation: sign * min.value, evaluations: min.evaluations })
}

/// Full QAOA loop: angle optimization, then `request.samples` shots from
/// the final state; the best sampled bitstring is returned.
pub fn qaoa_solve(request: &SolveRequest<'_>, settings: &QaoaSettings) -> Result<SolveOutcome> {
    request.validate()?;
    let start = Instant::now();
    let qubo = request.qubo;
    let cost = DiagonalCost::from_qubo(qubo, settings.max_qubits)?;
    let optimum = optimize_angles(qubo, &cost, settings)?;
    let state = qaoa_state(&cost, &optimum.params)?;
    let mut rng = rng_from_seed(derive_seed(request.seed, "qaoa-shots", &[]));
    let shots = state.sample(request.samples, &mut rng);
    let best = shots
        .iter()
        .copied()
        .reduce(|a, b| if qubo.better(cost.values[b], cost.values[a]) { b } else { a })
        .expect("at least one shot");
    let bits: Vec<u8> = (0..qubo.m).map(|i| (best >> i & 1) as u8).collect();
    Ok(SolveOutcome {
        best_value: qubo.objective_unchecked(&bits),
        best_candidate: Candidate::bits(bits),
        samples_taken: shots.len(),
        elapsed: floor_elapsed(start.elapsed().as_secs_f64()),
    })
}

/// Registry backend `qaoa-sim`.
#[derive(Debug, Clone, Copy, Default)]
pub struct QaoaBackend {
    pub settings: QaoaSettings,
}

impl Backend for QaoaBackend {
    fn id(&self) -> &'static str {
        "qaoa-sim"
    }

    fn solve(&self, request: &SolveRequest<'_>) -> Result<SolveOutcome> {
        qaoa_solve(request, &self.settings)
    }
}
