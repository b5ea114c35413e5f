use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{floor_elapsed, Backend, SolveOutcome, SolveRequest};
use crate::error::{QuasError, Result};
use crate::problems::{Candidate, QuboForm};
use crate::seed::{derive_seed, rng_from_seed};

/// Geometric temperature schedule for simulated annealing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnealSchedule {
    pub sweeps: usize,
    pub t_start: f64,
    pub t_end: f64,
    pub reads: usize,
}

impl AnnealSchedule {
    /// `100·m` sweeps from `max|coefficient|` down to 1% of it, 10 reads.
    pub fn default_for(qubo: &QuboForm) -> Self {
        let scale = qubo.max_abs_coefficient();
        let t_start = if scale > 0.0 { scale } else { 1.0 };
        AnnealSchedule { sweeps: (100 * qubo.m).max(1), t_start, t_end: 0.01 * t_start, reads: 10 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sweeps < 1 || self.reads < 1 {
            return Err(QuasError::Config("anneal schedule needs at least one sweep and one read".into()));
        }
        if !(self.t_start > 0.0 && self.t_end > 0.0 && self.t_end < self.t_start) {
            return Err(QuasError::Config(format!(
                "anneal temperatures must satisfy 0 < t_end < t_start, got {} and {}",
                self.t_end, self.t_start
            )));
        }
        Ok(())
    }

    /// Temperature at sweep `k` of `sweeps`.
    pub fn temperature(&self, k: usize) -> f64 {
        if self.sweeps == 1 {
            return self.t_start;
        }
        let frac = k as f64 / (self.sweeps - 1) as f64;
        self.t_start * (self.t_end / self.t_start).powf(frac)
    }
}

/// Simulated annealing with optional schedule overrides; reads come from
/// the request's sample count.
#[derive(Debug, Clone, Copy, Default)]
pub struct AnnealBackend {
    pub sweeps: Option<usize>,
    pub t_start: Option<f64>,
    pub t_end: Option<f64>,
}

impl Backend for AnnealBackend {
    fn id(&self) -> &'static str {
        "sa"
    }

    fn solve(&self, request: &SolveRequest<'_>) -> Result<SolveOutcome> {
        let mut schedule = AnnealSchedule::default_for(request.qubo);
        schedule.reads = request.samples;
        if let Some(s) = self.sweeps {
            schedule.sweeps = s;
        }
        if let Some(t) = self.t_start {
            schedule.t_start = t;
            if self.t_end.is_none() {
                schedule.t_end = 0.01 * t;
            }
        }
        if let Some(t) = self.t_end {
            schedule.t_end = t;
        }
        sa_solve(request, &schedule)
    }
}

/// Single-flip Metropolis state with incrementally maintained energy.
///
/// Energy is the objective multiplied by the direction's sign, so lower is
/// always better.
pub(crate) struct Annealer<'a> {
    qubo: &'a QuboForm,
    neighbors: Vec<Vec<(usize, f64)>>,
    sign: f64,
    pub(crate) bits: Vec<u8>,
    /// `∂objective/∂x_i` at the current bits: `linear_i + Σ_j Q_ij x_j`.
    field: Vec<f64>,
    pub(crate) energy: f64,
    pub(crate) best_energy: f64,
    pub(crate) best_bits: Vec<u8>,
}

impl<'a> Annealer<'a> {
    pub(crate) fn new(qubo: &'a QuboForm, bits: Vec<u8>) -> Self {
        let neighbors = qubo.neighbors();
        let field = (0..qubo.m)
            .map(|i| qubo.linear[i] + neighbors[i].iter().filter(|(j, _)| bits[*j] != 0).map(|(_, q)| q).sum::<f64>())
            .collect();
        let sign = qubo.direction.energy_sign();
        let energy = sign * qubo.objective_unchecked(&bits);
        Annealer { qubo, neighbors, sign, best_bits: bits.clone(), bits, field, energy, best_energy: energy }
    }

    pub(crate) fn sweep(&mut self, temperature: f64, rng: &mut impl Rng) {
        for i in 0..self.qubo.m {
            let up = self.bits[i] == 0;
            let delta_obj = if up { self.field[i] } else { -self.field[i] };
            let delta = self.sign * delta_obj;
            if delta <= 0.0 || rng.gen::<f64>() < (-delta / temperature).exp() {
                self.bits[i] = u8::from(up);
                self.energy += delta;
                let step = if up { 1.0 } else { -1.0 };
                for &(j, q) in &self.neighbors[i] {
                    self.field[j] += q * step;
                }
                if self.energy < self.best_energy {
                    self.best_energy = self.energy;
                    self.best_bits.copy_from_slice(&self.bits);
                }
            }
        }
    }
}

/// Runs `schedule.reads` independent anneals from random starts and
/// returns the best state seen across all of them.
pub fn sa_solve(request: &SolveRequest<'_>, schedule: &AnnealSchedule) -> Result<SolveOutcome> {
    request.validate()?;
    schedule.validate()?;
    let start = Instant::now();
    let qubo = request.qubo;
    let mut best: Option<(f64, Vec<u8>)> = None;
    let mut reads = 0;
    for read in 0..schedule.reads {
        let mut rng = rng_from_seed(derive_seed(request.seed, "sa-read", &[read as u64]));
        let init: Vec<u8> = (0..qubo.m).map(|_| rng.gen_range(0..2)).collect();
        let mut annealer = Annealer::new(qubo, init);
        for k in 0..schedule.sweeps {
            annealer.sweep(schedule.temperature(k), &mut rng);
        }
        reads += 1;
        if best.as_ref().is_none_or(|(e, _)| annealer.best_energy < *e) {
            best = Some((annealer.best_energy, annealer.best_bits));
        }
        if request.time_budget.is_some_and(|t| start.elapsed().as_secs_f64() >= t) {
            break;
        }
    }
    let (_, bits) = best.expect("at least one read");
    let best_value = qubo.objective_unchecked(&bits);
    Ok(SolveOutcome {
        best_candidate: Candidate::bits(bits),
        best_value,
        samples_taken: reads,
        elapsed: floor_elapsed(start.elapsed().as_secs_f64()),
    })
}
