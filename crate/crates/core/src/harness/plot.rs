use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::results::ResultFile;
use crate::error::{QuasError, Result};
use crate::scoring::{build_groups, lame_polyline, pareto_mask, QuasReport};

/// Samples along each fitted quadrant.
pub const CURVE_SAMPLES: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct PlotPoint {
    pub instance_index: usize,
    pub speed: f64,
    pub accuracy: f64,
    pub is_pareto: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SizePlot {
    pub size: usize,
    pub points: Vec<PlotPoint>,
    /// `(normalized speed, normalized accuracy)` along the fitted curve;
    /// empty when the size has no fit.
    pub curve: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotBundle {
    pub sizes: Vec<SizePlot>,
    pub files: Vec<PathBuf>,
}

/// Writes per-size CSVs of normalized points and fitted-curve polylines,
/// plus a `summary.csv` of the fit diagnostics.
pub fn export_plot_data(report: &QuasReport, points: &ResultFile, out_dir: impl AsRef<Path>) -> Result<PlotBundle> {
    if report.fingerprint.as_ref() != Some(&points.header.fingerprint) {
        return Err(QuasError::Data("report and result file come from different campaigns".into()));
    }
    let out_dir = out_dir.as_ref();
    std::fs::create_dir_all(out_dir)?;
    let groups = build_groups(&points.data_points(), report.min_accuracy);
    let mut bundle = PlotBundle { sizes: Vec::new(), files: Vec::new() };

    for group in &groups {
        let mask = pareto_mask(&group.normalized);
        let plot_points: Vec<PlotPoint> = group
            .points
            .iter()
            .zip(&group.normalized)
            .zip(&mask)
            .map(|((p, &(speed, accuracy)), &is_pareto)| PlotPoint {
                instance_index: p.instance_index,
                speed,
                accuracy,
                is_pareto,
            })
            .collect();
        let mut csv = String::from("instance_index,speed_norm,accuracy_norm,is_pareto\n");
        for p in &plot_points {
            writeln!(csv, "{},{},{},{}", p.instance_index, p.speed, p.accuracy, p.is_pareto).expect("string write");
        }
        let path = out_dir.join(format!("size_{:04}_points.csv", group.size));
        std::fs::write(&path, csv)?;
        bundle.files.push(path);

        let fit = report.sizes.iter().find(|s| s.size == group.size).and_then(|s| s.fit);
        let curve = match fit {
            Some(f) => {
                let curve = lame_polyline(f.a, f.b, f.p, CURVE_SAMPLES);
                let mut csv = String::from("speed_norm,accuracy_norm\n");
                for (u, v) in &curve {
                    writeln!(csv, "{u},{v}").expect("string write");
                }
                let path = out_dir.join(format!("size_{:04}_curve.csv", group.size));
                std::fs::write(&path, csv)?;
                bundle.files.push(path);
                curve
            }
            None => Vec::new(),
        };
        bundle.sizes.push(SizePlot { size: group.size, points: plot_points, curve });
    }

    let mut summary = String::from(
        "size,retained,front_points,a,b,p,residual,alpha_accuracy,alpha_speed,area_curve,area_offset,area\n",
    );
    for s in &report.sizes {
        let (a, b, p, r) = s.fit.map_or((String::new(), String::new(), String::new(), String::new()), |f| {
            (f.a.to_string(), f.b.to_string(), f.p.to_string(), f.residual.to_string())
        });
        let alpha = |axis: Option<crate::scoring::AxisNormalization>| axis.map_or(String::new(), |x| x.offset.to_string());
        writeln!(
            summary,
            "{},{},{},{a},{b},{p},{r},{},{},{},{},{}",
            s.size,
            s.retained,
            s.front_points,
            alpha(s.accuracy_axis),
            alpha(s.speed_axis),
            s.area_curve,
            s.area_offset,
            s.area
        )
        .expect("string write");
    }
    let path = out_dir.join("summary.csv");
    std::fs::write(&path, summary)?;
    bundle.files.push(path);
    Ok(bundle)
}
