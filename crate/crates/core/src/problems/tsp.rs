use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{QuasError, Result};
use crate::seed::rng_from_seed;

/// Symmetric TSP over `n` cities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TspInstance {
    pub n: usize,
    pub distance: Vec<Vec<f64>>,
    pub seed: u64,
}

/// `n` cities uniform in the unit square with Euclidean distances.
pub fn gen_tsp(n: usize, seed: u64) -> Result<TspInstance> {
    if n < 3 {
        return Err(QuasError::InvalidSize(format!("TSP needs at least 3 cities, got {n}")));
    }
    let mut rng = rng_from_seed(seed);
    let points: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
    let distance = points
        .iter()
        .map(|&(xi, yi)| points.iter().map(|&(xj, yj)| (xi - xj).hypot(yi - yj)).collect())
        .collect();
    Ok(TspInstance { n, distance, seed })
}

impl TspInstance {
    pub fn from_matrix(distance: Vec<Vec<f64>>) -> Result<Self> {
        let n = distance.len();
        if n < 3 {
            return Err(QuasError::InvalidSize(format!("TSP needs at least 3 cities, got {n}")));
        }
        for (i, row) in distance.iter().enumerate() {
            if row.len() != n {
                return Err(QuasError::Shape(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if row[i] != 0.0 {
                return Err(QuasError::Domain(format!("nonzero diagonal at {i}")));
            }
            for (j, &d) in row.iter().enumerate() {
                if d < 0.0 || d != distance[j][i] {
                    return Err(QuasError::Domain(format!("entry ({i}, {j}) is negative or asymmetric")));
                }
            }
        }
        Ok(TspInstance { n, distance, seed: 0 })
    }

    pub fn max_distance(&self) -> f64 {
        self.distance.iter().flatten().copied().fold(0.0, f64::max)
    }

    /// Weight of the one-hot constraint penalty in the QUBO encoding.
    ///
    /// Any single constraint violation costs more than the longest
    /// possible tour.
    pub fn penalty_weight(&self) -> f64 {
        2.0 * self.n as f64 * self.max_distance()
    }

    /// Length of the closed tour visiting `tour` in order.
    pub fn tour_length(&self, tour: &[usize]) -> f64 {
        let k = tour.len();
        (0..k).map(|t| self.distance[tour[t]][tour[(t + 1) % k]]).sum()
    }

    /// Index of the binary variable "city `city` at position `position`".
    pub fn var_index(&self, city: usize, position: usize) -> usize {
        city * self.n + position
    }
}

/// Checks that `tour` is a permutation of `0..n`.
pub fn is_permutation(tour: &[usize], n: usize) -> bool {
    if tour.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &c in tour {
        if c >= n || seen[c] {
            return false;
        }
        seen[c] = true;
    }
    true
}

/// Decodes a position-based one-hot matrix into a tour.
///
/// Returns `Ok(None)` when some city row or position column is not
/// exactly one-hot.
pub fn decode_tour(bits: &[u8], n: usize) -> Result<Option<Vec<usize>>> {
    if bits.len() != n * n {
        return Err(QuasError::Shape(format!("expected {} bits for {n} cities, got {}", n * n, bits.len())));
    }
    let mut tour = vec![usize::MAX; n];
    for city in 0..n {
        let row = &bits[city * n..(city + 1) * n];
        if row.iter().filter(|&&b| b != 0).count() != 1 {
            return Ok(None);
        }
        let position = row.iter().position(|&b| b != 0).expect("one-hot row");
        if tour[position] != usize::MAX {
            return Ok(None);
        }
        tour[position] = city;
    }
    Ok(Some(tour))
}

pub fn encode_tour(tour: &[usize]) -> Vec<u8> {
    let n = tour.len();
    let mut bits = vec![0u8; n * n];
    for (position, &city) in tour.iter().enumerate() {
        bits[city * n + position] = 1;
    }
    bits
}
