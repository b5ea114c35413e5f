use std::time::Instant;

use rand::Rng;

use super::{floor_elapsed, Backend, SolveOutcome, SolveRequest};
use crate::error::Result;
use crate::problems::Candidate;
use crate::seed::rng_from_seed;

/// Uniform bitstring sampling; the floor every real solver should beat.
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomBackend;

impl Backend for RandomBackend {
    fn id(&self) -> &'static str {
        "random"
    }

    fn solve(&self, request: &SolveRequest<'_>) -> Result<SolveOutcome> {
        random_solve(request)
    }
}

/// Draws `request.samples` uniform bitstrings and keeps the best.
pub fn random_solve(request: &SolveRequest<'_>) -> Result<SolveOutcome> {
    request.validate()?;
    let start = Instant::now();
    let qubo = request.qubo;
    let mut rng = rng_from_seed(request.seed);
    let mut bits = vec![0u8; qubo.m];
    let mut best_bits = bits.clone();
    let mut best_value = f64::NAN;
    let mut taken = 0;
    for _ in 0..request.samples {
        for b in bits.iter_mut() {
            *b = rng.gen_range(0..2);
        }
        let value = qubo.objective_unchecked(&bits);
        taken += 1;
        if taken == 1 || qubo.better(value, best_value) {
            best_value = value;
            best_bits.copy_from_slice(&bits);
        }
        if request.time_budget.is_some_and(|t| start.elapsed().as_secs_f64() >= t) {
            break;
        }
    }
    Ok(SolveOutcome {
        best_candidate: Candidate::bits(best_bits),
        best_value,
        samples_taken: taken,
        elapsed: floor_elapsed(start.elapsed().as_secs_f64()),
    })
}
