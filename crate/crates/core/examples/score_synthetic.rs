//! Scores hand-made measurements: min-accuracy filtering, normalization,
//! Pareto front, fit and per-size area.
//!
//! cargo run --example score_synthetic

use quas::problems::ProblemKind;
use quas::scoring::{build_groups, pareto_front, score_points, DataPoint, Weights};

fn point(size: usize, accuracy: f64, runtime: f64) -> DataPoint {
    DataPoint {
        problem: ProblemKind::MaxCut,
        size,
        instance_index: 0,
        backend: "demo".into(),
        accuracy,
        runtime,
        raw_value: accuracy,
        heuristic_value: 1.0,
        feasible: true,
        seed: 0,
        heuristic_runtime: 0.0,
    }
}

fn main() -> quas::Result<()> {
    let points = vec![
        point(8, 0.98, 0.020),
        point(8, 0.90, 0.008),
        point(8, 0.75, 0.004),
        point(8, 0.60, 0.002),
        point(8, 0.40, 0.001), // below 0.5, never used
        point(12, 0.95, 0.050),
        point(12, 0.70, 0.010),
        point(12, 0.85, 0.060),
    ];

    for group in build_groups(&points, 0.5) {
        println!(
            "size {}: {} retained, alpha_acc {:.3}, alpha_speed {:.3}, front {:?}",
            group.size,
            group.points.len(),
            group.accuracy_axis.offset,
            group.speed_axis.offset,
            pareto_front(&group.normalized)
        );
    }

    let report = score_points(&points, 0.5, Weights::default())?;
    for s in &report.sizes {
        println!("size {}: A_curve {:.4} + A_offset {:.4} = {:.4}", s.size, s.area_curve, s.area_offset, s.area);
    }
    println!("total {:.4}", report.total);

    let weighted = score_points(&points, 0.5, Weights { accuracy: 2.0, speed: 1.0 })?;
    println!("total with accuracy weighted 2x: {:.4}", weighted.total);
    Ok(())
}
