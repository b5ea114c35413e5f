use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::lame::{dominant_corner_fit, fit_lame, quadrant_area, LameFit};
use super::pareto::pareto_front;
use crate::error::{QuasError, Result};
use crate::harness::Fingerprint;
use crate::problems::ProblemKind;

/// Measurements below this accuracy never enter a fit.
pub const DEFAULT_MIN_ACCURACY: f64 = 0.5;
/// Runtimes are floored here before inverting to speed.
pub const RUNTIME_FLOOR: f64 = 1e-9;
/// Axis ranges below this are treated as a single value.
pub const DEGENERATE_RANGE: f64 = 1e-12;

/// One benchmark measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DataPoint {
    pub problem: ProblemKind,
    pub size: usize,
    pub instance_index: usize,
    pub backend: String,
    pub accuracy: f64,
    /// Solver wall time in seconds.
    pub runtime: f64,
    /// Solver objective value `S`.
    pub raw_value: f64,
    /// Heuristic objective value `S_heur`.
    pub heuristic_value: f64,
    pub feasible: bool,
    pub seed: u64,
    /// Heuristic wall time in seconds; logged only, never scored.
    #[serde(default)]
    pub heuristic_runtime: f64,
}

impl DataPoint {
    pub fn speed(&self) -> f64 {
        1.0 / self.runtime.max(RUNTIME_FLOOR)
    }
}

/// Min-max normalization constants of one KPI axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisNormalization {
    pub min: f64,
    pub max: f64,
    pub range: f64,
    /// `min / range`, capped at 1.
    pub offset: f64,
    pub degenerate: bool,
}

/// Maps values to `(x - min) / (max - min)` and computes the offset
/// `min / (max - min)` (capped at 1). A degenerate axis maps every value
/// to 1 with offset 1.
pub fn normalize_axis(values: &[f64]) -> (AxisNormalization, Vec<f64>) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let range = max - min;
    if values.is_empty() || range < DEGENERATE_RANGE {
        let norm = AxisNormalization { min, max, range: range.max(0.0), offset: 1.0, degenerate: true };
        return (norm, vec![1.0; values.len()]);
    }
    let normalized = values.iter().map(|v| ((v - min) / range).clamp(0.0, 1.0)).collect();
    (AxisNormalization { min, max, range, offset: (min / range).min(1.0), degenerate: false }, normalized)
}

/// Retained measurements at one problem size with their normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeGroup {
    pub size: usize,
    pub points: Vec<DataPoint>,
    pub speeds: Vec<f64>,
    pub accuracy_axis: AxisNormalization,
    pub speed_axis: AxisNormalization,
    /// `(normalized speed, normalized accuracy)` per retained point.
    pub normalized: Vec<(f64, f64)>,
}

impl SizeGroup {
    /// Fewer than two retained points: the size contributes nothing.
    pub fn is_degenerate(&self) -> bool {
        self.points.len() < 2
    }
}

/// Drops infeasible points and points below `min_accuracy`, groups the
/// rest by size (ascending) and normalizes both KPI axes per group.
pub fn build_groups(points: &[DataPoint], min_accuracy: f64) -> Vec<SizeGroup> {
    let mut by_size: BTreeMap<usize, Vec<DataPoint>> = BTreeMap::new();
    for p in points.iter().filter(|p| p.feasible && p.accuracy >= min_accuracy) {
        by_size.entry(p.size).or_default().push(p.clone());
    }
    by_size
        .into_iter()
        .map(|(size, points)| {
            let speeds: Vec<f64> = points.iter().map(DataPoint::speed).collect();
            let accuracies: Vec<f64> = points.iter().map(|p| p.accuracy).collect();
            let (accuracy_axis, acc_norm) = normalize_axis(&accuracies);
            let (speed_axis, speed_norm) = normalize_axis(&speeds);
            let normalized = speed_norm.into_iter().zip(acc_norm).collect();
            SizeGroup { size, points, speeds, accuracy_axis, speed_axis, normalized }
        })
        .collect()
}

/// Relative importance of the two fitted KPIs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Weights {
    pub accuracy: f64,
    pub speed: f64,
}

impl Default for Weights {
    fn default() -> Self {
        Weights { accuracy: 1.0, speed: 1.0 }
    }
}

impl Weights {
    pub fn validate(&self) -> Result<()> {
        if !(self.accuracy > 0.0 && self.speed > 0.0 && self.accuracy.is_finite() && self.speed.is_finite()) {
            return Err(QuasError::Config(format!("KPI weights must be positive, got {self:?}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SizeScore {
    pub size: usize,
    pub retained: usize,
    pub front_points: usize,
    pub fit: Option<LameFit>,
    pub accuracy_axis: Option<AxisNormalization>,
    pub speed_axis: Option<AxisNormalization>,
    pub area_curve: f64,
    pub area_offset: f64,
    pub area: f64,
}

impl SizeScore {
    pub fn empty(size: usize, retained: usize) -> Self {
        SizeScore {
            size,
            retained,
            front_points: 0,
            fit: None,
            accuracy_axis: None,
            speed_axis: None,
            area_curve: 0.0,
            area_offset: 0.0,
            area: 0.0,
        }
    }
}

/// Offset area in normalized space, where both axis maxima are 1.
pub fn offset_area(alpha_accuracy: f64, alpha_speed: f64) -> f64 {
    alpha_accuracy + alpha_speed - alpha_accuracy * alpha_speed
}

/// Scores one size: fitted quadrant area on the Pareto front plus the
/// offset area. Groups with fewer than two retained points score 0.
pub fn size_score(group: &SizeGroup, weights: Weights) -> Result<SizeScore> {
    weights.validate()?;
    if group.is_degenerate() {
        return Ok(SizeScore::empty(group.size, group.points.len()));
    }
    let front = pareto_front(&group.normalized);
    let fit = if front.len() == 1 { dominant_corner_fit() } else { fit_lame(&front)? };
    let area_curve = quadrant_area(weights.speed * fit.a, weights.accuracy * fit.b, fit.p)?;
    let area_offset = offset_area(group.accuracy_axis.offset, group.speed_axis.offset);
    Ok(SizeScore {
        size: group.size,
        retained: group.points.len(),
        front_points: front.len(),
        fit: Some(fit),
        accuracy_axis: Some(group.accuracy_axis),
        speed_axis: Some(group.speed_axis),
        area_curve,
        area_offset,
        area: area_curve + area_offset,
    })
}

/// The aggregated score with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuasReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<Fingerprint>,
    pub min_accuracy: f64,
    pub weights: Weights,
    pub sizes: Vec<SizeScore>,
    pub total: f64,
    #[serde(default)]
    pub notes: Vec<String>,
}

/// Sums the per-size areas. Sizes must be distinct; the report lists
/// them in ascending order.
pub fn total_score(mut size_scores: Vec<SizeScore>, weights: Weights, min_accuracy: f64) -> Result<QuasReport> {
    size_scores.sort_by_key(|s| s.size);
    if let Some(w) = size_scores.windows(2).find(|w| w[0].size == w[1].size) {
        return Err(QuasError::Aggregation(format!("size {} appears more than once", w[0].size)));
    }
    let total = size_scores.iter().map(|s| s.area).sum();
    Ok(QuasReport { fingerprint: None, min_accuracy, weights, sizes: size_scores, total, notes: Vec::new() })
}

/// `build_groups → size_score → total_score` in one call.
pub fn score_points(points: &[DataPoint], min_accuracy: f64, weights: Weights) -> Result<QuasReport> {
    let scores = build_groups(points, min_accuracy)
        .iter()
        .map(|g| size_score(g, weights))
        .collect::<Result<Vec<_>>>()?;
    total_score(scores, weights, min_accuracy)
}
