//! Benchmark problems, their objectives and their QUBO reductions.

mod graph;
mod ising;
mod qubo;
mod tsp;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{QuasError, Result};

pub use graph::{gen_er_graph, Edge, GraphInstance};
pub use ising::{gen_ising, Coupling, IsingInstance};
pub use qubo::{DecoderTag, QuboBuilder, QuboForm};
pub use tsp::{decode_tour, encode_tour, gen_tsp, is_permutation, TspInstance};

/// Default edge probability for Max-Cut graphs.
pub const ER_EDGE_PROB: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemKind {
    MaxCut,
    Ising,
    Tsp,
}

impl ProblemKind {
    pub fn tag(self) -> &'static str {
        match self {
            ProblemKind::MaxCut => "max-cut",
            ProblemKind::Ising => "ising",
            ProblemKind::Tsp => "tsp",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            ProblemKind::MaxCut => Direction::Maximize,
            ProblemKind::Ising | ProblemKind::Tsp => Direction::Minimize,
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            ProblemKind::MaxCut => 2,
            ProblemKind::Ising => 1,
            ProblemKind::Tsp => 3,
        }
    }

    /// Generates the instance of size `n` for `seed` using the default ensemble.
    pub fn generate(self, n: usize, seed: u64) -> Result<ProblemInstance> {
        Ok(match self {
            ProblemKind::MaxCut => ProblemInstance::MaxCut(gen_er_graph(n, ER_EDGE_PROB, seed)?),
            ProblemKind::Ising => ProblemInstance::Ising(gen_ising(n, seed)?),
            ProblemKind::Tsp => ProblemInstance::Tsp(gen_tsp(n, seed)?),
        })
    }

    /// Human-readable description of the instance ensemble.
    pub fn ensemble(self) -> &'static str {
        match self {
            ProblemKind::MaxCut => "Erdos-Renyi G(n, 1/2), unit weights",
            ProblemKind::Ising => "dense, J_ij and h_j uniform on [-1, 1], mu = 1",
            ProblemKind::Tsp => "n cities uniform in the unit square, Euclidean distances",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ProblemKind {
    type Err = QuasError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "max-cut" | "maxcut" | "mcp" => Ok(ProblemKind::MaxCut),
            "ising" | "ip" => Ok(ProblemKind::Ising),
            "tsp" => Ok(ProblemKind::Tsp),
            other => Err(QuasError::Config(format!("unknown problem '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Maximize,
    Minimize,
}

impl Direction {
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Direction::Maximize => a > b,
            Direction::Minimize => a < b,
        }
    }

    /// `+1` for minimization, `-1` for maximization: multiplying an
    /// objective by this turns it into an energy to minimize.
    pub fn energy_sign(self) -> f64 {
        match self {
            Direction::Maximize => -1.0,
            Direction::Minimize => 1.0,
        }
    }
}

/// A problem instance of any supported kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "kebab-case")]
pub enum ProblemInstance {
    MaxCut(GraphInstance),
    Ising(IsingInstance),
    Tsp(TspInstance),
}

/// The native form of a solution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Assignment {
    /// Binary vector (Max-Cut partition or raw QUBO bits).
    Bits(Vec<u8>),
    /// Spin vector with entries in `{-1, +1}`.
    Spins(Vec<i8>),
    /// City order of a closed tour.
    Tour(Vec<usize>),
}

impl Assignment {
    pub fn len(&self) -> usize {
        match self {
            Assignment::Bits(b) => b.len(),
            Assignment::Spins(s) => s.len(),
            Assignment::Tour(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub assignment: Assignment,
    pub feasible: bool,
}

impl Candidate {
    pub fn bits(bits: Vec<u8>) -> Self {
        Candidate { assignment: Assignment::Bits(bits), feasible: true }
    }

    pub fn spins(spins: Vec<i8>) -> Self {
        Candidate { assignment: Assignment::Spins(spins), feasible: true }
    }

    pub fn tour(tour: Vec<usize>) -> Self {
        Candidate { assignment: Assignment::Tour(tour), feasible: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveValue {
    pub value: f64,
    pub direction: Direction,
    pub feasible: bool,
}

impl ProblemInstance {
    pub fn kind(&self) -> ProblemKind {
        match self {
            ProblemInstance::MaxCut(_) => ProblemKind::MaxCut,
            ProblemInstance::Ising(_) => ProblemKind::Ising,
            ProblemInstance::Tsp(_) => ProblemKind::Tsp,
        }
    }

    /// Problem size: vertices, spins or cities.
    pub fn size(&self) -> usize {
        match self {
            ProblemInstance::MaxCut(g) => g.n,
            ProblemInstance::Ising(i) => i.n,
            ProblemInstance::Tsp(t) => t.n,
        }
    }

    /// Number of binary variables after reduction to QUBO.
    pub fn num_qubo_vars(&self) -> usize {
        match self {
            ProblemInstance::Tsp(t) => t.n * t.n,
            _ => self.size(),
        }
    }

    pub fn direction(&self) -> Direction {
        self.kind().direction()
    }

    pub fn seed(&self) -> u64 {
        match self {
            ProblemInstance::MaxCut(g) => g.seed,
            ProblemInstance::Ising(i) => i.seed,
            ProblemInstance::Tsp(t) => t.seed,
        }
    }

    /// Evaluates a candidate with the native objective.
    ///
    /// An infeasible TSP candidate carries its raw bits; its value is the
    /// penalized QUBO objective of those bits and `feasible` is false.
    pub fn evaluate(&self, candidate: &Candidate) -> Result<ObjectiveValue> {
        let direction = self.direction();
        let shape_err = |expected: usize, got: usize| {
            QuasError::Shape(format!("{} candidate has length {got}, expected {expected}", self.kind()))
        };
        let value = match (self, &candidate.assignment) {
            (ProblemInstance::MaxCut(g), Assignment::Bits(bits)) => {
                if bits.len() != g.n {
                    return Err(shape_err(g.n, bits.len()));
                }
                g.cut_value(bits)
            }
            (ProblemInstance::Ising(inst), Assignment::Spins(spins)) => {
                if spins.len() != inst.n {
                    return Err(shape_err(inst.n, spins.len()));
                }
                if spins.iter().any(|&s| s != 1 && s != -1) {
                    return Err(QuasError::Domain("spins must be -1 or +1".into()));
                }
                inst.energy(spins)
            }
            (ProblemInstance::Tsp(t), Assignment::Tour(tour)) => {
                if !is_permutation(tour, t.n) {
                    return Err(QuasError::Shape(format!("tour is not a permutation of {} cities", t.n)));
                }
                t.tour_length(tour)
            }
            (ProblemInstance::Tsp(t), Assignment::Bits(bits)) => {
                if bits.len() != t.n * t.n {
                    return Err(shape_err(t.n * t.n, bits.len()));
                }
                return match decode_tour(bits, t.n)? {
                    Some(tour) => Ok(ObjectiveValue { value: t.tour_length(&tour), direction, feasible: true }),
                    None => Ok(ObjectiveValue { value: self.to_qubo().objective(bits)?, direction, feasible: false }),
                };
            }
            (_, a) => {
                return Err(QuasError::Shape(format!(
                    "{} instance cannot evaluate a {} assignment",
                    self.kind(),
                    match a {
                        Assignment::Bits(_) => "bit",
                        Assignment::Spins(_) => "spin",
                        Assignment::Tour(_) => "tour",
                    }
                )))
            }
        };
        Ok(ObjectiveValue { value, direction, feasible: candidate.feasible })
    }

    /// Reduces the instance to a QUBO whose objective equals the native
    /// objective on every encoded feasible solution.
    pub fn to_qubo(&self) -> QuboForm {
        match self {
            ProblemInstance::MaxCut(g) => {
                let mut b = QuboForm::builder(g.n);
                for e in &g.edges {
                    b.add_linear(e.u, e.weight).add_linear(e.v, e.weight).add_quadratic(e.u, e.v, -2.0 * e.weight);
                }
                b.build(Direction::Maximize, DecoderTag::Partition)
            }
            ProblemInstance::Ising(inst) => {
                // σ = 2x - 1
                let mut b = QuboForm::builder(inst.n);
                for c in &inst.couplings {
                    b.add_quadratic(c.i, c.j, -4.0 * c.value)
                        .add_linear(c.i, 2.0 * c.value)
                        .add_linear(c.j, 2.0 * c.value)
                        .add_constant(-c.value);
                }
                for (j, &h) in inst.fields.iter().enumerate() {
                    b.add_linear(j, -2.0 * inst.mu * h).add_constant(inst.mu * h);
                }
                b.build(Direction::Minimize, DecoderTag::Spins)
            }
            ProblemInstance::Tsp(t) => {
                let n = t.n;
                let penalty = t.penalty_weight();
                let mut b = QuboForm::builder(n * n);
                for pos in 0..n {
                    let next = (pos + 1) % n;
                    for u in 0..n {
                        for v in 0..n {
                            if u != v && t.distance[u][v] != 0.0 {
                                b.add_quadratic(t.var_index(u, pos), t.var_index(v, next), t.distance[u][v]);
                            }
                        }
                    }
                }
                // P·(1 - Σ x)² = P·(1 - Σ x + 2 Σ_{a<b} x_a x_b) for each city row and position column
                let mut one_hot = |vars: &[usize]| {
                    b.add_constant(penalty);
                    for (k, &a) in vars.iter().enumerate() {
                        b.add_linear(a, -penalty);
                        for &c in &vars[k + 1..] {
                            b.add_quadratic(a, c, 2.0 * penalty);
                        }
                    }
                };
                for city in 0..n {
                    let row: Vec<usize> = (0..n).map(|p| t.var_index(city, p)).collect();
                    one_hot(&row);
                }
                for pos in 0..n {
                    let col: Vec<usize> = (0..n).map(|c| t.var_index(c, pos)).collect();
                    one_hot(&col);
                }
                b.build(Direction::Minimize, DecoderTag::OneHotTour { cities: n })
            }
        }
    }

    /// Turns QUBO bits into a native candidate.
    pub fn decode(&self, bits: &[u8]) -> Result<Candidate> {
        if bits.len() != self.num_qubo_vars() {
            return Err(QuasError::Shape(format!(
                "expected {} bits, got {}",
                self.num_qubo_vars(),
                bits.len()
            )));
        }
        Ok(match self {
            ProblemInstance::MaxCut(_) => Candidate::bits(bits.to_vec()),
            ProblemInstance::Ising(_) => Candidate::spins(bits.iter().map(|&b| if b != 0 { 1 } else { -1 }).collect()),
            ProblemInstance::Tsp(t) => decode_tsp(bits, t)?,
        })
    }

    /// Inverse of [`ProblemInstance::decode`] for feasible candidates.
    pub fn encode(&self, candidate: &Candidate) -> Result<Vec<u8>> {
        match (self, &candidate.assignment) {
            (ProblemInstance::MaxCut(_), Assignment::Bits(b)) => Ok(b.clone()),
            (ProblemInstance::Ising(_), Assignment::Spins(s)) => Ok(s.iter().map(|&x| u8::from(x > 0)).collect()),
            (ProblemInstance::Tsp(t), Assignment::Tour(tour)) if is_permutation(tour, t.n) => Ok(encode_tour(tour)),
            (ProblemInstance::Tsp(_), Assignment::Bits(b)) => Ok(b.clone()),
            _ => Err(QuasError::Shape(format!("cannot encode this candidate for a {} instance", self.kind()))),
        }
    }
}

/// Decodes TSP bits; non-one-hot matrices give an infeasible candidate
/// that keeps the raw bits.
pub fn decode_tsp(bits: &[u8], instance: &TspInstance) -> Result<Candidate> {
    Ok(match decode_tour(bits, instance.n)? {
        Some(tour) => Candidate::tour(tour),
        None => Candidate { assignment: Assignment::Bits(bits.to_vec()), feasible: false },
    })
}
