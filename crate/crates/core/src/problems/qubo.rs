use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Direction;
use crate::error::{QuasError, Result};

/// Which problem decoding turns a bitstring back into a native solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecoderTag {
    Partition,
    Spins,
    OneHotTour { cities: usize },
    Raw,
}

/// `constant + Σ linear_i x_i + Σ_{i<j} quadratic_ij x_i x_j` over binary `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuboForm {
    pub m: usize,
    pub linear: Vec<f64>,
    /// `(i, j, value)` with `i < j`, sorted and without duplicates.
    pub quadratic: Vec<(usize, usize, f64)>,
    pub constant: f64,
    pub direction: Direction,
    pub decoder: DecoderTag,
}

/// Accumulates coefficients and produces a canonical [`QuboForm`].
#[derive(Debug, Clone)]
pub struct QuboBuilder {
    m: usize,
    linear: Vec<f64>,
    quadratic: BTreeMap<(usize, usize), f64>,
    constant: f64,
}

impl QuboBuilder {
    pub fn new(m: usize) -> Self {
        QuboBuilder { m, linear: vec![0.0; m], quadratic: BTreeMap::new(), constant: 0.0 }
    }

    pub fn add_constant(&mut self, c: f64) -> &mut Self {
        self.constant += c;
        self
    }

    pub fn add_linear(&mut self, i: usize, c: f64) -> &mut Self {
        self.linear[i] += c;
        self
    }

    /// Adds `c·x_i·x_j`; `i == j` folds into the linear term since `x² = x`.
    pub fn add_quadratic(&mut self, i: usize, j: usize, c: f64) -> &mut Self {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.linear[i] += c,
            std::cmp::Ordering::Less => *self.quadratic.entry((i, j)).or_insert(0.0) += c,
            std::cmp::Ordering::Greater => *self.quadratic.entry((j, i)).or_insert(0.0) += c,
        }
        self
    }

    pub fn build(self, direction: Direction, decoder: DecoderTag) -> QuboForm {
        let quadratic = self
            .quadratic
            .into_iter()
            .filter(|&(_, v)| v != 0.0)
            .map(|((i, j), v)| (i, j, v))
            .collect();
        QuboForm { m: self.m, linear: self.linear, quadratic, constant: self.constant, direction, decoder }
    }
}

impl QuboForm {
    pub fn builder(m: usize) -> QuboBuilder {
        QuboBuilder::new(m)
    }

    pub fn objective(&self, bits: &[u8]) -> Result<f64> {
        if bits.len() != self.m {
            return Err(QuasError::Shape(format!("QUBO has {} variables, got {} bits", self.m, bits.len())));
        }
        Ok(self.objective_unchecked(bits))
    }

    pub(crate) fn objective_unchecked(&self, bits: &[u8]) -> f64 {
        let lin: f64 = self.linear.iter().zip(bits).filter(|(_, &b)| b != 0).map(|(c, _)| c).sum();
        let quad: f64 = self
            .quadratic
            .iter()
            .filter(|&&(i, j, _)| bits[i] != 0 && bits[j] != 0)
            .map(|&(_, _, v)| v)
            .sum();
        self.constant + lin + quad
    }

    /// Symmetric neighbor lists `(j, Q_ij)` for incremental updates.
    pub fn neighbors(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.m];
        for &(i, j, v) in &self.quadratic {
            adj[i].push((j, v));
            adj[j].push((i, v));
        }
        adj
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.linear
            .iter()
            .copied()
            .chain(self.quadratic.iter().map(|&(_, _, v)| v))
            .fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Whether `a` is strictly better than `b` under this form's direction.
    pub fn better(&self, a: f64, b: f64) -> bool {
        self.direction.better(a, b)
    }
}
