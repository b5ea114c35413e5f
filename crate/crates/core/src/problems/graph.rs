use serde::{Deserialize, Serialize};

use crate::error::{QuasError, Result};
use crate::seed::counter_uniform;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// An undirected weighted graph with `u < v` on every edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphInstance {
    pub n: usize,
    pub edges: Vec<Edge>,
    pub seed: u64,
}

/// Erdős–Rényi `G(n, edge_prob)` graph with unit weights.
///
/// Each unordered pair is decided by a counter-based draw keyed on
/// `(seed, u, v)`, so the result depends only on the inputs.
pub fn gen_er_graph(n: usize, edge_prob: f64, seed: u64) -> Result<GraphInstance> {
    if n < 2 {
        return Err(QuasError::InvalidSize(format!("graph needs at least 2 vertices, got {n}")));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(QuasError::Domain(format!("edge probability {edge_prob} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if counter_uniform(seed, u as u64, v as u64) < edge_prob {
                edges.push(Edge { u, v, weight: 1.0 });
            }
        }
    }
    Ok(GraphInstance { n, edges, seed })
}

impl GraphInstance {
    /// Builds a graph from explicit edges, normalizing each to `u < v`.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        if n < 2 {
            return Err(QuasError::InvalidSize(format!("graph needs at least 2 vertices, got {n}")));
        }
        let mut out: Vec<Edge> = Vec::with_capacity(edges.len());
        for &(a, b, weight) in edges {
            if a == b {
                return Err(QuasError::Domain(format!("self-loop on vertex {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(QuasError::Domain(format!("vertex {v} out of range for n = {n}")));
            }
            if out.iter().any(|e| e.u == u && e.v == v) {
                return Err(QuasError::Domain(format!("duplicate edge ({u}, {v})")));
            }
            out.push(Edge { u, v, weight });
        }
        Ok(GraphInstance { n, edges: out, seed: 0 })
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Total weight of edges whose endpoints lie on different sides.
    pub fn cut_value(&self, side: &[u8]) -> f64 {
        self.edges
            .iter()
            .filter(|e| side[e.u] != side[e.v])
            .map(|e| e.weight)
            .sum()
    }

    /// Neighbor lists `(neighbor, weight)` per vertex.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.weight));
            adj[e.v].push((e.u, e.weight));
        }
        adj
    }
}
