//! Classical reference heuristics and the accuracy KPI.
//!
//! Accuracy is always relative to the pinned heuristic for the problem
//! kind, so the heuristic identity and budget travel with every result.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{QuasError, Result};
use crate::problems::{Candidate, Direction, GraphInstance, IsingInstance, ProblemInstance, ProblemKind, TspInstance};
use crate::seed::rng_from_seed;

const IMPROVEMENT_EPS: f64 = 1e-12;

/// Iteration budget for one heuristic call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeuristicBudget {
    /// Improving moves allowed per restart.
    pub iterations: usize,
    pub restarts: usize,
}

/// Size-independent heuristic configuration: iterations scale with `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeuristicConfig {
    pub iterations_per_var: usize,
    pub restarts: usize,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig { iterations_per_var: 50, restarts: 10 }
    }
}

impl HeuristicConfig {
    pub fn budget_for(&self, n: usize) -> HeuristicBudget {
        HeuristicBudget { iterations: (self.iterations_per_var * n).max(1), restarts: self.restarts.max(1) }
    }

    /// Identity string stamped into result files, e.g.
    /// `max-cut-local-search@1 (iterations=50n, restarts=10)`.
    pub fn identity(&self, kind: ProblemKind) -> String {
        let name = match kind {
            ProblemKind::MaxCut => "max-cut-local-search@1",
            ProblemKind::Ising => "ising-greedy-descent@1",
            ProblemKind::Tsp => "tsp-nearest-neighbor-2opt@1",
        };
        format!("{name} (iterations={}n, restarts={})", self.iterations_per_var, self.restarts)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeuristicResult {
    pub value: f64,
    pub candidate: Candidate,
    pub budget_used: usize,
    /// Seconds.
    pub elapsed: f64,
}

/// Runs the pinned heuristic for the instance's problem kind.
///
/// - Max-Cut: steepest-ascent single-flip local search from random partitions.
/// - Ising: steepest single-spin descent from random spin vectors.
/// - TSP: nearest-neighbor construction from a random city, then 2-opt.
///
/// The best of `budget.restarts` runs is returned.
pub fn heuristic_solve(instance: &ProblemInstance, budget: HeuristicBudget, seed: u64) -> Result<HeuristicResult> {
    if budget.iterations < 1 || budget.restarts < 1 {
        return Err(QuasError::Config("heuristic budget must be at least 1".into()));
    }
    let start = Instant::now();
    let mut rng = rng_from_seed(seed);
    let direction = instance.direction();
    let mut best: Option<(f64, Candidate)> = None;
    let mut used = 0;
    for _ in 0..budget.restarts {
        let (candidate, iters) = match instance {
            ProblemInstance::MaxCut(g) => maxcut_local_search(g, budget.iterations, &mut rng),
            ProblemInstance::Ising(inst) => ising_descent(inst, budget.iterations, &mut rng),
            ProblemInstance::Tsp(t) => tsp_two_opt(t, budget.iterations, &mut rng),
        };
        used += iters;
        let value = instance.evaluate(&candidate)?.value;
        if best.as_ref().is_none_or(|(b, _)| direction.better(value, *b)) {
            best = Some((value, candidate));
        }
    }
    let (value, candidate) = best.expect("at least one restart");
    Ok(HeuristicResult { value, candidate, budget_used: used, elapsed: start.elapsed().as_secs_f64() })
}

fn maxcut_local_search(g: &GraphInstance, max_iters: usize, rng: &mut impl Rng) -> (Candidate, usize) {
    let adj = g.adjacency();
    let mut side: Vec<u8> = (0..g.n).map(|_| rng.gen_range(0..2)).collect();
    // gain[v]: change in cut weight when v switches sides
    let mut gain: Vec<f64> = (0..g.n)
        .map(|v| adj[v].iter().map(|&(w, wt)| if side[w] == side[v] { wt } else { -wt }).sum())
        .collect();
    let mut iters = 0;
    while iters < max_iters {
        let (v, g_best) = gain
            .iter()
            .copied()
            .enumerate()
            .fold((usize::MAX, IMPROVEMENT_EPS), |acc, (v, gv)| if gv > acc.1 { (v, gv) } else { acc });
        if v == usize::MAX {
            break;
        }
        side[v] ^= 1;
        gain[v] = -g_best;
        for &(w, wt) in &adj[v] {
            // edge (v, w) switched between crossing and non-crossing
            gain[w] += if side[w] == side[v] { 2.0 * wt } else { -2.0 * wt };
        }
        iters += 1;
    }
    (Candidate::bits(side), iters)
}

fn ising_descent(inst: &IsingInstance, max_iters: usize, rng: &mut impl Rng) -> (Candidate, usize) {
    let n = inst.n;
    let mut adj = vec![Vec::new(); n];
    for c in &inst.couplings {
        adj[c.i].push((c.j, c.value));
        adj[c.j].push((c.i, c.value));
    }
    let mut spins: Vec<i8> = (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
    let mut local: Vec<f64> = (0..n)
        .map(|i| adj[i].iter().map(|&(j, jv)| jv * f64::from(spins[j])).sum::<f64>() + inst.mu * inst.fields[i])
        .collect();
    let mut iters = 0;
    while iters < max_iters {
        // flipping i changes H by 2 σ_i L_i
        let (i, _) = (0..n)
            .map(|i| (i, 2.0 * f64::from(spins[i]) * local[i]))
            .fold((usize::MAX, -IMPROVEMENT_EPS), |acc, (i, d)| if d < acc.1 { (i, d) } else { acc });
        if i == usize::MAX {
            break;
        }
        spins[i] = -spins[i];
        let s = f64::from(spins[i]);
        for &(j, jv) in &adj[i] {
            local[j] += 2.0 * jv * s;
        }
        iters += 1;
    }
    (Candidate::spins(spins), iters)
}

fn tsp_two_opt(t: &TspInstance, max_iters: usize, rng: &mut impl Rng) -> (Candidate, usize) {
    let n = t.n;
    let d = &t.distance;
    let start = rng.gen_range(0..n);
    let mut tour = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    tour.push(start);
    visited[start] = true;
    let mut current = start;
    for _ in 1..n {
        let mut order: Vec<usize> = (0..n).filter(|&c| !visited[c]).collect();
        // random tie-breaking between equidistant cities
        order.shuffle(rng);
        let next = order
            .into_iter()
            .min_by(|&a, &b| d[current][a].total_cmp(&d[current][b]))
            .expect("unvisited city");
        visited[next] = true;
        tour.push(next);
        current = next;
    }
    let mut iters = 0;
    'search: while iters < max_iters {
        for i in 0..n - 1 {
            for j in (i + 2)..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b, c, e) = (tour[i], tour[i + 1], tour[j], tour[(j + 1) % n]);
                let delta = d[a][c] + d[b][e] - d[a][b] - d[c][e];
                if delta < -IMPROVEMENT_EPS {
                    tour[i + 1..=j].reverse();
                    iters += 1;
                    continue 'search;
                }
            }
        }
        break;
    }
    (Candidate::tour(tour), iters)
}

/// Accuracy of `s` relative to the heuristic value `s_heur`.
///
/// `1 - (s_heur - s)/|s_heur|` when maximizing and `1 - (s - s_heur)/|s_heur|`
/// when minimizing, clamped below at 0. Values above 1 mean the solver beat
/// the heuristic.
pub fn accuracy(s: f64, s_heur: f64, direction: Direction) -> Result<f64> {
    if s_heur == 0.0 {
        return Err(QuasError::DegenerateBaseline);
    }
    let shortfall = match direction {
        Direction::Maximize => s_heur - s,
        Direction::Minimize => s - s_heur,
    };
    Ok((1.0 - shortfall / s_heur.abs()).max(0.0))
}

/// Accuracy with the recording policy applied: infeasible solutions score
/// 0, and a zero baseline scores 1 when `s` is also zero and 0 otherwise.
pub fn accuracy_kpi(s: f64, s_heur: f64, direction: Direction, feasible: bool) -> f64 {
    if !feasible {
        return 0.0;
    }
    match accuracy(s, s_heur, direction) {
        Ok(a) => a,
        Err(_) if s == 0.0 => 1.0,
        Err(_) => 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccuracyRecord {
    pub s: f64,
    pub s_heur: f64,
    pub direction: Direction,
    pub accuracy: f64,
}

impl AccuracyRecord {
    pub fn new(s: f64, s_heur: f64, direction: Direction, feasible: bool) -> Self {
        AccuracyRecord { s, s_heur, direction, accuracy: accuracy_kpi(s, s_heur, direction, feasible) }
    }
}
