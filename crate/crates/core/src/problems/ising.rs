use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{QuasError, Result};
use crate::seed::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coupling {
    pub i: usize,
    pub j: usize,
    pub value: f64,
}

/// Ising system with energy `H = -Σ J_ij σ_i σ_j - μ Σ h_j σ_j`.
///
/// Couplings are stored once per unordered pair with `i < j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsingInstance {
    pub n: usize,
    pub couplings: Vec<Coupling>,
    pub fields: Vec<f64>,
    pub mu: f64,
    pub seed: u64,
}

/// Dense Ising instance with `J_ij` and `h_j` uniform on `[-1, 1]` and `μ = 1`.
pub fn gen_ising(n: usize, seed: u64) -> Result<IsingInstance> {
    if n < 1 {
        return Err(QuasError::InvalidSize("Ising instance needs at least 1 spin".into()));
    }
    let mut rng = rng_from_seed(seed);
    let mut couplings = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            couplings.push(Coupling { i, j, value: rng.gen_range(-1.0..=1.0) });
        }
    }
    let fields = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    Ok(IsingInstance { n, couplings, fields, mu: 1.0, seed })
}

impl IsingInstance {
    pub fn new(n: usize, couplings: &[(usize, usize, f64)], fields: Vec<f64>, mu: f64) -> Result<Self> {
        if n < 1 {
            return Err(QuasError::InvalidSize("Ising instance needs at least 1 spin".into()));
        }
        if fields.len() != n {
            return Err(QuasError::Shape(format!("{} fields for {n} spins", fields.len())));
        }
        let mut out = Vec::with_capacity(couplings.len());
        for &(a, b, value) in couplings {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == j || j >= n {
                return Err(QuasError::Domain(format!("invalid coupling ({a}, {b}) for n = {n}")));
            }
            out.push(Coupling { i, j, value });
        }
        Ok(IsingInstance { n, couplings: out, fields, mu, seed: 0 })
    }

    /// Energy of a spin vector with entries in `{-1, +1}`.
    pub fn energy(&self, spins: &[i8]) -> f64 {
        let pair: f64 = self
            .couplings
            .iter()
            .map(|c| c.value * f64::from(spins[c.i]) * f64::from(spins[c.j]))
            .sum();
        let field: f64 = self.fields.iter().zip(spins).map(|(h, &s)| h * f64::from(s)).sum();
        -pair - self.mu * field
    }
}
