//! Application-level benchmarking of optimization solvers.
//!
//! The crate covers the whole pipeline behind the Quantum Application Score:
//!
//! - [`problems`]: Max-Cut, Ising and TSP instance generation, objective
//!   evaluation and reduction to QUBO form.
//! - [`baselines`]: the pinned classical heuristics and the accuracy KPI.
//! - [`backends`]: the QUBO solver contract with uniform-random and
//!   simulated-annealing backends.
//! - [`qaoa`]: a statevector QAOA simulator registered as a backend.
//! - [`scoring`]: normalization, Pareto fronts, Lamé-curve fitting and the
//!   per-size areas that add up to the score.
//! - [`harness`]: campaigns, line-delimited JSON result files, reports and
//!   plot data.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod backends;
pub mod baselines;
pub mod error;
pub mod harness;
pub mod problems;
pub mod qaoa;
pub mod scoring;
pub mod seed;

pub use error::{QuasError, Result};
