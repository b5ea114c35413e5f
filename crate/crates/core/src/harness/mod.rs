//! Campaigns: instance generation, timed backend runs, result files,
//! reports and plot data.

mod campaign;
mod plot;
mod results;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::backends::BackendConfig;
use crate::baselines::HeuristicConfig;
use crate::error::{QuasError, Result};
use crate::problems::ProblemKind;
use crate::scoring::{Weights, DEFAULT_MIN_ACCURACY};

pub use campaign::{instance_seed, run_campaign, score_file, score_result_file, report_path, ScoreOverrides};
pub use plot::{export_plot_data, PlotBundle, PlotPoint, SizePlot, CURVE_SAMPLES};
pub use results::{Record, ResultFile, ResultHeader, ResultWriter, SkipRecord, RESULT_FORMAT, RESULT_VERSION};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable naming the default output directory of `run`.
pub const OUTPUT_DIR_ENV: &str = "QUAS_OUTPUT_DIR";

/// Everything that determines the recorded values of a campaign, apart
/// from which sizes and instance indices were run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub tool_version: String,
    pub problem: ProblemKind,
    pub ensemble: String,
    pub backend: BackendConfig,
    pub campaign_seed: u64,
    pub heuristic: String,
    pub heuristic_config: HeuristicConfig,
    pub runtime_kpi: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub problem: ProblemKind,
    pub backend: BackendConfig,
    pub sizes: Vec<usize>,
    pub instances_per_size: usize,
    pub campaign_seed: u64,
    pub min_accuracy: f64,
    pub weights: Weights,
    pub heuristic: HeuristicConfig,
    pub output: PathBuf,
}

impl CampaignConfig {
    /// Defaults: 25 instances per size, min accuracy 0.5, unit weights.
    pub fn new(problem: ProblemKind, backend: BackendConfig, sizes: Vec<usize>, output: impl Into<PathBuf>) -> Self {
        CampaignConfig {
            problem,
            backend,
            sizes,
            instances_per_size: 25,
            campaign_seed: 0,
            min_accuracy: DEFAULT_MIN_ACCURACY,
            weights: Weights::default(),
            heuristic: HeuristicConfig::default(),
            output: output.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.instances_per_size < 1 {
            return Err(QuasError::Config("instances per size must be at least 1".into()));
        }
        if self.sizes.is_empty() {
            return Err(QuasError::Config("no sizes given".into()));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(QuasError::Config(format!("sizes must be strictly increasing: {:?}", self.sizes)));
        }
        let min = self.problem.min_size();
        if self.sizes[0] < min {
            return Err(QuasError::Config(format!("{} needs sizes of at least {min}", self.problem)));
        }
        if self.heuristic.iterations_per_var < 1 || self.heuristic.restarts < 1 {
            return Err(QuasError::Config("heuristic budget must be at least 1".into()));
        }
        self.weights.validate()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            tool_version: TOOL_VERSION.to_string(),
            problem: self.problem,
            ensemble: self.problem.ensemble().to_string(),
            backend: self.backend.clone(),
            campaign_seed: self.campaign_seed,
            heuristic: self.heuristic.identity(self.problem),
            heuristic_config: self.heuristic,
            runtime_kpi: "solver wall time of the full solve call including decoding; heuristic time excluded".into(),
        }
    }
}

/// Parses `4..12` / `4..=12` / `4-12` (inclusive ranges) or `4,6,8`.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    let bad = || QuasError::Config(format!("cannot parse sizes '{text}'"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let text = text.trim();
    let range = text.split_once("..=").or_else(|| text.split_once("..")).or_else(|| text.split_once('-'));
    let sizes = match range {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(bad());
            }
            (lo..=hi).collect()
        }
        None => text.split(',').map(num).collect::<Result<Vec<_>>>()?,
    };
    if sizes.is_empty() {
        return Err(bad());
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_parse() {
        assert_eq!(parse_sizes("4..6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_sizes("4..=6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_sizes("3-4").unwrap(), vec![3, 4]);
        assert_eq!(parse_sizes("5, 7,9").unwrap(), vec![5, 7, 9]);
        assert_eq!(parse_sizes("8").unwrap(), vec![8]);
        assert!(parse_sizes("6..4").is_err());
        assert!(parse_sizes("a,b").is_err());
    }

    #[test]
    fn config_validation() {
        let base = CampaignConfig::new(ProblemKind::Tsp, BackendConfig::from_id("sa").unwrap(), vec![3, 4], "x");
        assert!(base.validate().is_ok());
        assert!(CampaignConfig { sizes: vec![4, 3], ..base.clone() }.validate().is_err());
        assert!(CampaignConfig { sizes: vec![2, 3], ..base.clone() }.validate().is_err());
        assert!(CampaignConfig { sizes: vec![], ..base.clone() }.validate().is_err());
        assert!(CampaignConfig { instances_per_size: 0, ..base.clone() }.validate().is_err());
    }
}
