//! Independent reference implementations used by the integration tests.
//! None of these share code with the library beyond its input types.
#![allow(dead_code)]

use num_complex::Complex64;
use quas::problems::{IsingInstance, ProblemKind, QuboForm};
use quas::scoring::DataPoint;

/// Tanh-sinh quadrature of `f` over `[0, 1]`. Handles the infinite-slope
/// endpoints of Lamé integrands.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, level: u32) -> f64 {
    let h = 1.0 / f64::from(1u32 << level);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut sum = 0.0;
    let mut k: i64 = 0;
    loop {
        let t = k as f64 * h;
        let s = half_pi * t.sinh();
        let c = s.cosh();
        // weight of x = tanh(s) on [-1, 1]
        let w = half_pi * t.cosh() / (c * c);
        if w < 1e-300 || !w.is_finite() {
            break;
        }
        // distance from the endpoints, computed without cancellation
        let gap = 1.0 / (s.abs().exp() * c);
        let (lo, hi) = (gap / 2.0, 1.0 - gap / 2.0);
        let term = if k == 0 { f(0.5) } else { f(hi) + f(lo) };
        sum += w * term;
        k += 1;
        if k > 100_000 {
            break;
        }
    }
    // dx = dX/2 on [0, 1]
    sum * h / 2.0
}

/// `∫₀¹ (1 - u^p)^{1/p} du`, the unit Lamé quadrant area.
pub fn lame_area_quadrature(p: f64) -> f64 {
    tanh_sinh(|u| (1.0 - u.powf(p)).max(0.0).powf(1.0 / p), 7)
}

/// All `2^m` QUBO values by direct evaluation, indexed with bit `i` = variable `i`.
pub fn qubo_table(q: &QuboForm) -> Vec<f64> {
    (0..1usize << q.m)
        .map(|z| {
            let bits: Vec<u8> = (0..q.m).map(|i| (z >> i & 1) as u8).collect();
            q.objective(&bits).unwrap()
        })
        .collect()
}

pub type Matrix = Vec<Vec<Complex64>>;

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn matvec(a: &Matrix, x: &[Complex64]) -> Vec<Complex64> {
    a.iter().map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum()).collect()
}

/// Dense `exp(-iβX)^{⊗n}` built as a Kronecker product of 2×2 blocks.
pub fn dense_mixer(n: usize, beta: f64) -> Matrix {
    let c = Complex64::new(beta.cos(), 0.0);
    let s = Complex64::new(0.0, -beta.sin());
    let one = [[c, s], [s, c]];
    let dim = 1usize << n;
    let mut full: Matrix = vec![vec![Complex64::new(1.0, 0.0)]];
    for _ in 0..n {
        let d = full.len();
        let mut next = vec![vec![Complex64::new(0.0, 0.0); 2 * d]; 2 * d];
        // the new qubit becomes the most significant bit
        for (bi, row) in one.iter().enumerate() {
            for (bj, &g) in row.iter().enumerate() {
                for i in 0..d {
                    for j in 0..d {
                        next[bi * d + i][bj * d + j] = g * full[i][j];
                    }
                }
            }
        }
        full = next;
    }
    assert_eq!(full.len(), dim);
    full
}

/// Dense `exp(-iγC)` for a diagonal cost table.
pub fn dense_phase(costs: &[f64], gamma: f64) -> Matrix {
    let n = costs.len();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (z, &c) in costs.iter().enumerate() {
        m[z][z] = Complex64::from_polar(1.0, -gamma * c);
    }
    m
}

/// `⟨ψ|C|ψ⟩` for the p-layer QAOA state, by dense matrix products.
pub fn dense_qaoa_expectation(costs: &[f64], n: usize, gammas: &[f64], betas: &[f64]) -> f64 {
    let dim = 1usize << n;
    let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    let mut psi = vec![amp; dim];
    for (&g, &b) in gammas.iter().zip(betas) {
        let layer = matmul(&dense_mixer(n, b), &dense_phase(costs, g));
        psi = matvec(&layer, &psi);
    }
    let mut h = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (z, &c) in costs.iter().enumerate() {
        h[z][z] = Complex64::new(c, 0.0);
    }
    let hpsi = matvec(&h, &psi);
    psi.iter().zip(&hpsi).map(|(a, b)| (a.conj() * b).re).sum()
}

/// Points not weakly dominated by any distinct point, deduplicated and
/// sorted by `u`. Quadratic on purpose.
pub fn brute_force_front(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut front: Vec<(f64, f64)> = Vec::new();
    for &(u, v) in points {
        let dominated = points
            .iter()
            .any(|&(x, y)| x >= u && y >= v && (x > u || y > v));
        if !dominated && !front.contains(&(u, v)) {
            front.push((u, v));
        }
    }
    front.sort_by(|a, b| a.0.total_cmp(&b.0));
    front
}

/// Ground-state energy by enumerating all `2^n` spin states.
pub fn ising_ground_energy(inst: &IsingInstance) -> f64 {
    (0..1usize << inst.n)
        .map(|z| {
            let spins: Vec<i8> = (0..inst.n).map(|i| if z >> i & 1 == 1 { 1 } else { -1 }).collect();
            inst.energy(&spins)
        })
        .fold(f64::INFINITY, f64::min)
}

pub fn point(size: usize, accuracy: f64, runtime: f64) -> DataPoint {
    DataPoint {
        problem: ProblemKind::MaxCut,
        size,
        instance_index: 0,
        backend: "sa".into(),
        accuracy,
        runtime,
        raw_value: accuracy,
        heuristic_value: 1.0,
        feasible: true,
        seed: 0,
        heuristic_runtime: 0.0,
    }
}
