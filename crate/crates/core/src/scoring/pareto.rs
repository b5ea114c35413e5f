//! Pareto fronts over two higher-is-better axes.
//!
//! Points are `(speed, accuracy)` pairs. `q` dominates `p` when it is at
//! least as good on both axes and strictly better on one.

/// Marks the points that survive on the front. Among exact duplicates
/// only the first occurrence is marked.
pub fn pareto_mask(points: &[(f64, f64)]) -> Vec<bool> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        points[j]
            .0
            .total_cmp(&points[i].0)
            .then(points[j].1.total_cmp(&points[i].1))
            .then(i.cmp(&j))
    });
    let mut mask = vec![false; points.len()];
    let mut best_second = f64::NEG_INFINITY;
    for i in order {
        // sorted by first axis descending: survivors must strictly improve the second axis
        if points[i].1 > best_second {
            mask[i] = true;
            best_second = points[i].1;
        }
    }
    mask
}

/// Non-dominated points, duplicates collapsed, sorted by the first axis
/// ascending (and therefore by the second axis descending).
pub fn pareto_front(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mask = pareto_mask(points);
    let mut front: Vec<(f64, f64)> = points.iter().zip(&mask).filter(|(_, &m)| m).map(|(p, _)| *p).collect();
    front.sort_by(|a, b| a.0.total_cmp(&b.0));
    front
}
