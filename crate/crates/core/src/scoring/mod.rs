//! Score computation: normalization, Pareto fronts, Lamé-curve fits and
//! per-size areas summed into a single number.

mod gamma;
mod lame;
mod nelder_mead;
mod pareto;
mod score;

pub use gamma::gamma;
pub use lame::{
    dominant_corner_fit, fit_lame, fit_lame_with, fit_settings, lame_polyline, lame_residual, quadrant_area,
    LameFit, A_MAX, FIT_START, P_MAX, P_MIN,
};
pub use nelder_mead::{nelder_mead, Minimum, OptimizerSettings};
pub use pareto::{pareto_front, pareto_mask};
pub use score::{
    build_groups, normalize_axis, offset_area, score_points, size_score, total_score, AxisNormalization, DataPoint,
    QuasReport, SizeGroup, SizeScore, Weights, DEFAULT_MIN_ACCURACY, DEGENERATE_RANGE, RUNTIME_FLOOR,
};
