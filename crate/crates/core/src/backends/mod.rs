//! The QUBO solver contract and the reference backends.
//!
//! Every problem reaches a backend through [`crate::problems::ProblemInstance::to_qubo`],
//! so backends never see problem-specific structure.

mod anneal;
mod random;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{QuasError, Result};
use crate::problems::{Candidate, QuboForm};
use crate::qaoa::{QaoaBackend, QaoaSettings};

pub use anneal::{sa_solve, AnnealBackend, AnnealSchedule};
pub use random::{random_solve, RandomBackend};

/// Shortest elapsed time ever reported, in seconds.
pub const MIN_ELAPSED: f64 = 1e-9;

#[derive(Debug, Clone, Copy)]
pub struct SolveRequest<'a> {
    pub qubo: &'a QuboForm,
    /// Samples, shots or reads depending on the backend.
    pub samples: usize,
    pub seed: u64,
    /// Optional wall-clock budget in seconds.
    pub time_budget: Option<f64>,
}

impl<'a> SolveRequest<'a> {
    pub fn new(qubo: &'a QuboForm, samples: usize, seed: u64) -> Self {
        SolveRequest { qubo, samples, seed, time_budget: None }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.samples < 1 {
            return Err(QuasError::Config("solve request needs at least one sample".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveOutcome {
    /// Raw QUBO bits of the best solution found.
    pub best_candidate: Candidate,
    /// QUBO objective of `best_candidate`.
    pub best_value: f64,
    pub samples_taken: usize,
    /// Wall time of the whole solve call, in seconds.
    pub elapsed: f64,
}

impl SolveOutcome {
    pub fn best_bits(&self) -> &[u8] {
        match &self.best_candidate.assignment {
            crate::problems::Assignment::Bits(b) => b,
            _ => unreachable!("backends always return bit candidates"),
        }
    }
}

pub trait Backend: Send + Sync {
    /// Registry identifier.
    fn id(&self) -> &'static str;

    fn solve(&self, request: &SolveRequest<'_>) -> Result<SolveOutcome>;
}

/// Backend selection plus its settings, as stored in result-file headers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "kebab-case")]
pub enum BackendConfig {
    Random {
        samples: usize,
    },
    Sa {
        reads: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sweeps: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t_start: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t_end: Option<f64>,
    },
    QaoaSim {
        layers: usize,
        shots: usize,
        max_evals: usize,
        max_qubits: usize,
    },
}

pub const BACKEND_IDS: [&str; 3] = ["random", "sa", "qaoa-sim"];

impl BackendConfig {
    /// Default settings for a registered backend id.
    pub fn from_id(id: &str) -> Result<Self> {
        match id {
            "random" => Ok(BackendConfig::Random { samples: 1 }),
            "sa" => Ok(BackendConfig::Sa { reads: 10, sweeps: None, t_start: None, t_end: None }),
            "qaoa-sim" => {
                let q = QaoaSettings::default();
                Ok(BackendConfig::QaoaSim {
                    layers: q.layers,
                    shots: 1024,
                    max_evals: q.optimizer.max_evals.unwrap_or(200),
                    max_qubits: q.max_qubits,
                })
            }
            other => Err(QuasError::Config(format!(
                "unknown backend '{other}' (registered: {})",
                BACKEND_IDS.join(", ")
            ))),
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            BackendConfig::Random { .. } => "random",
            BackendConfig::Sa { .. } => "sa",
            BackendConfig::QaoaSim { .. } => "qaoa-sim",
        }
    }

    /// Samples, reads or shots passed in each [`SolveRequest`].
    pub fn samples(&self) -> usize {
        match *self {
            BackendConfig::Random { samples } => samples,
            BackendConfig::Sa { reads, .. } => reads,
            BackendConfig::QaoaSim { shots, .. } => shots,
        }
    }

    pub fn build(&self) -> Result<Box<dyn Backend>> {
        if self.samples() < 1 {
            return Err(QuasError::Config(format!("backend '{}' needs at least one sample", self.id())));
        }
        Ok(match *self {
            BackendConfig::Random { .. } => Box::new(RandomBackend),
            BackendConfig::Sa { sweeps, t_start, t_end, .. } => Box::new(AnnealBackend { sweeps, t_start, t_end }),
            BackendConfig::QaoaSim { layers, max_evals, max_qubits, .. } => {
                if layers < 1 {
                    return Err(QuasError::Config("QAOA needs at least one layer".into()));
                }
                let mut settings = QaoaSettings { layers, max_qubits, ..QaoaSettings::default() };
                settings.optimizer.max_evals = Some(max_evals);
                Box::new(QaoaBackend { settings })
            }
        })
    }
}

impl fmt::Display for BackendConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

pub(crate) fn floor_elapsed(secs: f64) -> f64 {
    secs.max(MIN_ELAPSED)
}
