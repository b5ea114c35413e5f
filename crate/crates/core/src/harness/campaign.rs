use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use super::results::{Record, ResultFile, ResultHeader, ResultWriter, SkipRecord};
use super::CampaignConfig;
use crate::backends::{floor_elapsed, SolveRequest};
use crate::baselines::{accuracy_kpi, heuristic_solve};
use crate::error::{QuasError, Result};
use crate::problems::ProblemKind;
use crate::scoring::{score_points, DataPoint, QuasReport, Weights};
use crate::seed::derive_seed;

/// Seed of instance `index` at `size`, derived from the campaign seed.
pub fn instance_seed(campaign_seed: u64, problem: ProblemKind, size: usize, index: usize) -> u64 {
    derive_seed(campaign_seed, problem.tag(), &[size as u64, index as u64])
}

/// Runs every `(size, instance)` pair not yet present in the output file.
///
/// An existing output file is resumed when its header fingerprint matches
/// the configuration, and rejected otherwise. Records are flushed one by
/// one, so an interrupted campaign loses at most the instance in flight.
pub fn run_campaign(config: &CampaignConfig) -> Result<ResultFile> {
    config.validate()?;
    let backend = config.backend.build()?;
    let header = ResultHeader::new(config.fingerprint());

    let resumable = config.output.exists() && std::fs::metadata(&config.output)?.len() > 0;
    let (mut writer, done): (ResultWriter, HashSet<(usize, usize)>) = if resumable {
        let existing = ResultFile::read(&config.output)?;
        if existing.header.fingerprint != header.fingerprint {
            return Err(QuasError::Config(format!(
                "{} was written by a different campaign configuration",
                config.output.display()
            )));
        }
        (ResultWriter::append_to(&config.output)?, existing.records.iter().map(Record::key).collect())
    } else {
        (ResultWriter::create(&config.output, &header)?, HashSet::new())
    };

    let direction = config.problem.direction();
    for &size in &config.sizes {
        for index in 0..config.instances_per_size {
            if done.contains(&(size, index)) {
                continue;
            }
            let seed = instance_seed(config.campaign_seed, config.problem, size, index);
            let instance = config.problem.generate(size, seed)?;
            let heuristic = heuristic_solve(&instance, config.heuristic.budget_for(size), derive_seed(seed, "heuristic", &[]))?;
            let qubo = instance.to_qubo();
            let request = SolveRequest::new(&qubo, config.backend.samples(), derive_seed(seed, "backend", &[]));

            let clock = Instant::now();
            let outcome = match backend.solve(&request) {
                Ok(o) => o,
                Err(e @ QuasError::Capacity { .. }) => {
                    writer.append(&Record::Skip(SkipRecord { size, instance_index: index, reason: e.to_string() }))?;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let candidate = instance.decode(outcome.best_bits())?;
            let runtime = floor_elapsed(clock.elapsed().as_secs_f64());

            let objective = instance.evaluate(&candidate)?;
            let point = DataPoint {
                problem: config.problem,
                size,
                instance_index: index,
                backend: config.backend.id().to_string(),
                accuracy: accuracy_kpi(objective.value, heuristic.value, direction, objective.feasible),
                runtime,
                raw_value: objective.value,
                heuristic_value: heuristic.value,
                feasible: objective.feasible,
                seed,
                heuristic_runtime: heuristic.elapsed,
            };
            writer.append(&Record::Point(point))?;
        }
    }
    drop(writer);
    ResultFile::read(&config.output)
}

/// Optional replacements for the scoring knobs.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ScoreOverrides {
    pub min_accuracy: Option<f64>,
    pub weights: Option<Weights>,
}

/// Scores an in-memory result file. All points must share the problem
/// and backend recorded in its header.
pub fn score_result_file(file: &ResultFile, overrides: ScoreOverrides) -> Result<QuasReport> {
    let fp = &file.header.fingerprint;
    for p in file.points() {
        if p.problem != fp.problem {
            return Err(QuasError::Data(format!(
                "mixed problems: header says {}, found {} (scores are per problem)",
                fp.problem, p.problem
            )));
        }
        if p.backend != fp.backend.id() {
            return Err(QuasError::Data(format!(
                "mixed backends: header says {}, found {}",
                fp.backend.id(),
                p.backend
            )));
        }
        if p.runtime.is_nan() || p.runtime <= 0.0 {
            return Err(QuasError::Data(format!("non-positive runtime at size {} instance {}", p.size, p.instance_index)));
        }
    }
    let min_accuracy = overrides.min_accuracy.unwrap_or(crate::scoring::DEFAULT_MIN_ACCURACY);
    let weights = overrides.weights.unwrap_or_default();
    let mut report = score_points(&file.data_points(), min_accuracy, weights)?;
    report.fingerprint = Some(fp.clone());
    report.notes = report_notes(fp.backend.id());
    Ok(report)
}

fn report_notes(backend: &str) -> Vec<String> {
    let mut notes = vec![
        "accuracy = 1 - (S_heur - S)/|S_heur| when maximizing and 1 - (S - S_heur)/|S_heur| when minimizing, clamped at 0; \
         the minimization form is an interpretation; infeasible solutions score 0"
            .to_string(),
        "accuracies above 1 are not clipped before normalization".to_string(),
        "fitted axes: x = normalized speed (1/runtime, scale a), y = normalized accuracy (scale b), both higher-is-better"
            .to_string(),
        "offset area is evaluated in normalized space: alpha_acc + alpha_speed - alpha_acc*alpha_speed, \
         alpha = min/range capped at 1, degenerate axes get alpha = 1"
            .to_string(),
        "a single-point Pareto front is scored as the unit-square limit a = b = 1, p = 20".to_string(),
        "runtime excludes the heuristic baseline; it covers the backend solve call and decoding".to_string(),
    ];
    if backend == "qaoa-sim" {
        notes.push("qaoa-sim optimizes angles on the exact statevector expectation; shots are drawn only for the reported solution".into());
    }
    notes
}

/// Report location for a result file: `runs/x.jsonl` → `runs/x.report.json`.
pub fn report_path(input: &Path) -> PathBuf {
    input.with_extension("report.json")
}

/// Scores a result file and writes the report next to it.
pub fn score_file(input: impl AsRef<Path>, overrides: ScoreOverrides) -> Result<QuasReport> {
    let input = input.as_ref();
    let file = ResultFile::read(input)?;
    let report = score_result_file(&file, overrides)?;
    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    std::fs::write(report_path(input), json)?;
    Ok(report)
}
