//! Acceptance criteria, one line each. Runs as a plain binary so the
//! PASS/FAIL lines are always printed; exits nonzero on any failure.

mod common;

use std::path::Path;
use std::time::{Duration, Instant};

use common::{brute_force_front, dense_qaoa_expectation, ising_ground_energy, lame_area_quadrature, qubo_table};
use quas::backends::{sa_solve, AnnealSchedule, BackendConfig, SolveRequest};
use quas::baselines::accuracy;
use quas::harness::{report_path, run_campaign, score_file, CampaignConfig, ResultFile, ScoreOverrides};
use quas::problems::{gen_er_graph, gen_ising, GraphInstance, ProblemInstance, ProblemKind};
use quas::qaoa::{
    expectation, prepare_plus_state, qaoa_solve, qaoa_state, DiagonalCost, QaoaParams, QaoaSettings,
    DEFAULT_MAX_QUBITS,
};
use quas::scoring::{
    build_groups, fit_lame, lame_polyline, normalize_axis, pareto_front, quadrant_area, score_points, DataPoint,
    Weights, DEFAULT_MIN_ACCURACY,
};
use quas::seed::rng_from_seed;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn area_formula() -> Outcome {
    let quarter = quadrant_area(1.0, 1.0, 2.0).map_err(|e| e.to_string())?;
    check((quarter - std::f64::consts::FRAC_PI_4).abs() < 1e-9, format!("A(1,1,2) = {quarter}"))?;
    let diamond = quadrant_area(1.0, 1.0, 1.0).map_err(|e| e.to_string())?;
    check((diamond - 0.5).abs() < 1e-12, format!("A(1,1,1) = {diamond}"))?;
    let mut worst: f64 = 0.0;
    for p in [0.5, 1.0, 2.0, 4.0, 8.0] {
        let d = (quadrant_area(1.0, 1.0, p).map_err(|e| e.to_string())? - lame_area_quadrature(p)).abs();
        worst = worst.max(d);
    }
    check(worst < 1e-6, format!("quadrature gap {worst:e}"))?;
    Ok(format!("max quadrature gap {worst:.1e}"))
}

fn normalization() -> Outcome {
    let (axis, out) = normalize_axis(&[2.0, 4.0, 6.0]);
    check(out == [0.0, 0.5, 1.0] && axis.offset == 0.5, format!("{out:?}, alpha = {}", axis.offset))?;
    // range 2 < min 10 → min/range = 5, capped
    let (axis, _) = normalize_axis(&[10.0, 11.0, 12.0]);
    check(axis.offset == 1.0, format!("capped alpha = {}", axis.offset))?;
    Ok("[2,4,6] -> [0,0.5,1], alpha 0.5; cap engages".into())
}

fn pareto_oracle() -> Outcome {
    let mut rng = rng_from_seed(2024);
    for set in 0..1000 {
        let pts: Vec<(f64, f64)> = if set % 4 == 3 {
            (0..200).map(|_| (f64::from(rng.gen_range(0..10)) / 10.0, f64::from(rng.gen_range(0..10)) / 10.0)).collect()
        } else {
            (0..200).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect()
        };
        check(pareto_front(&pts) == brute_force_front(&pts), format!("set {set} differs"))?;
    }
    Ok("1000 sets of 200 points agree".into())
}

fn fit_recovery() -> Outcome {
    let mut worst: f64 = 0.0;
    for (a, b, p) in [(1.0, 1.0, 2.0), (1.0, 1.0, 1.0), (0.8, 1.2, 4.0)] {
        let fit = fit_lame(&lame_polyline(a, b, p, 20)).map_err(|e| e.to_string())?;
        for (got, want) in [(fit.a, a), (fit.b, b), (fit.p, p)] {
            worst = worst.max(((got - want) / want).abs());
        }
    }
    check(worst < 0.02, format!("worst relative error {worst:.3e}"))?;
    Ok(format!("worst relative error {worst:.1e}"))
}

fn synthetic_point(size: usize, accuracy: f64, runtime: f64) -> DataPoint {
    common::point(size, accuracy, runtime)
}

fn min_accuracy_rule() -> Outcome {
    let mut rng = rng_from_seed(5);
    for trial in 0..300 {
        let size = 4 + trial % 5;
        let n = rng.gen_range(2..25);
        let base: Vec<DataPoint> = (0..n)
            .map(|_| synthetic_point(size, rng.gen_range(0.0..1.2), rng.gen_range(1e-4..1.0)))
            .collect();
        let mut noisy = base.clone();
        for _ in 0..rng.gen_range(1..15) {
            let at = rng.gen_range(0..=noisy.len());
            noisy.insert(at, synthetic_point(size, rng.gen_range(0.0..0.5), rng.gen_range(1e-7..10.0)));
        }
        let a = score_points(&base, DEFAULT_MIN_ACCURACY, Weights::default()).map_err(|e| e.to_string())?;
        let b = score_points(&noisy, DEFAULT_MIN_ACCURACY, Weights::default()).map_err(|e| e.to_string())?;
        check(a == b, format!("trial {trial}: sub-threshold points changed the report"))?;
        let ga = build_groups(&base, DEFAULT_MIN_ACCURACY);
        let gb = build_groups(&noisy, DEFAULT_MIN_ACCURACY);
        check(ga == gb, format!("trial {trial}: groups differ"))?;
    }
    Ok("300 randomized insertions leave groups, fronts, fits and areas identical".into())
}

fn annealing_quality() -> Outcome {
    let mut hits = 0;
    for seed in 0..25u64 {
        let inst = gen_ising(12, seed).map_err(|e| e.to_string())?;
        let optimum = ising_ground_energy(&inst);
        let q = ProblemInstance::Ising(inst).to_qubo();
        let out = sa_solve(&SolveRequest::new(&q, 10, seed.wrapping_add(1)), &AnnealSchedule::default_for(&q))
            .map_err(|e| e.to_string())?;
        if (out.best_value - optimum).abs() <= 0.05 * optimum.abs() {
            hits += 1;
        }
    }
    check(hits * 100 >= 90 * 25, format!("{hits}/25 within 5%"))?;
    Ok(format!("{hits}/25 instances within 5% of the exhaustive optimum"))
}

fn qaoa_correctness() -> Outcome {
    let mut rng = rng_from_seed(77);
    let mut worst: f64 = 0.0;
    for n in 1..=4 {
        for seed in 0..5 {
            let kind = if seed % 2 == 0 { ProblemKind::Ising } else { ProblemKind::MaxCut };
            let q = match (kind, n) {
                (ProblemKind::MaxCut, 1) => continue,
                _ => kind.generate(n, seed).map_err(|e| e.to_string())?.to_qubo(),
            };
            let cost = DiagonalCost::from_qubo(&q, DEFAULT_MAX_QUBITS).map_err(|e| e.to_string())?;
            let layers = 1 + (seed as usize) % 3;
            let g: Vec<f64> = (0..layers).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let b: Vec<f64> = (0..layers).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let params = QaoaParams::new(g.clone(), b.clone()).map_err(|e| e.to_string())?;
            let fast = qaoa_state(&cost, &params).and_then(|s| expectation(&s, &cost)).map_err(|e| e.to_string())?;
            worst = worst.max((fast - dense_qaoa_expectation(&qubo_table(&q), n, &g, &b)).abs());
        }
    }
    check(worst < 1e-9, format!("dense oracle gap {worst:e}"))?;

    let edge = ProblemInstance::MaxCut(GraphInstance::from_edges(2, &[(0, 1, 1.0)]).map_err(|e| e.to_string())?);
    let q = edge.to_qubo();
    let out = qaoa_solve(&SolveRequest::new(&q, 256, 1), &QaoaSettings::default()).map_err(|e| e.to_string())?;
    let value = edge.evaluate(&edge.decode(out.best_bits()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let acc = accuracy(value.value, 1.0, edge.direction()).map_err(|e| e.to_string())?;
    check(acc == 1.0, format!("single-edge accuracy {acc}"))?;

    for (n, seed) in [(2, 0), (4, 1), (6, 9), (9, 3), (12, 5)] {
        let g = gen_er_graph(n, 0.5, seed).map_err(|e| e.to_string())?;
        let m = g.edges.len() as f64;
        let q = ProblemInstance::MaxCut(g).to_qubo();
        let cost = DiagonalCost::from_qubo(&q, DEFAULT_MAX_QUBITS).map_err(|e| e.to_string())?;
        let e = prepare_plus_state(n, DEFAULT_MAX_QUBITS)
            .and_then(|s| expectation(&s, &cost))
            .map_err(|e| e.to_string())?;
        check((e - m / 2.0).abs() < 1e-9, format!("uniform expectation {e} vs m/2 = {}", m / 2.0))?;
    }
    Ok(format!("dense gap {worst:.1e}; single edge accuracy 1; uniform = m/2 on 5 graphs"))
}

fn maxcut_config(dir: &Path, name: &str, backend: &str, sizes: std::ops::RangeInclusive<usize>) -> CampaignConfig {
    let mut c = CampaignConfig::new(ProblemKind::MaxCut, BackendConfig::from_id(backend).unwrap(), sizes.collect(), dir.join(name));
    c.instances_per_size = 25;
    c.campaign_seed = 1;
    c
}

fn mean_accuracy(file: &ResultFile) -> f64 {
    let n = file.points().count().max(1) as f64;
    file.points().map(|p| p.accuracy).sum::<f64>() / n
}

fn end_to_end(dir: &Path) -> Outcome {
    let err = |e: quas::QuasError| e.to_string();
    let sa = maxcut_config(dir, "sa.jsonl", "sa", 4..=12);
    let sa_file = run_campaign(&sa).map_err(err)?;
    let sa_total = score_file(&sa.output, ScoreOverrides::default()).map_err(err)?.total;

    let extended = maxcut_config(dir, "sa.jsonl", "sa", 4..=13);
    run_campaign(&extended).map_err(err)?;
    let ext_total = score_file(&extended.output, ScoreOverrides::default()).map_err(err)?.total;

    let random = maxcut_config(dir, "random.jsonl", "random", 4..=12);
    let random_file = run_campaign(&random).map_err(err)?;
    let random_total = score_file(&random.output, ScoreOverrides::default()).map_err(err)?.total;

    let summary = format!(
        "sa 4-12 {sa_total:.4} (>0: {}), 4-13 {ext_total:.4} (increases: {}), random 4-12 {random_total:.4} (sa wins: {}); \
         mean accuracy sa {:.4} vs random {:.4}",
        sa_total > 0.0,
        ext_total > sa_total,
        sa_total > random_total,
        mean_accuracy(&sa_file),
        mean_accuracy(&random_file),
    );
    check(sa_total > 0.0 && ext_total > sa_total && sa_total > random_total, summary.clone())?;
    Ok(summary)
}

fn tsp_infeasibility(dir: &Path) -> Outcome {
    let err = |e: quas::QuasError| e.to_string();
    // one uniform draw over n² bits is almost never a permutation matrix;
    // annealing on the penalized QUBO almost always is
    let mut points = Vec::new();
    for (name, backend) in [("tsp-random.jsonl", BackendConfig::Random { samples: 1 }), ("tsp-sa.jsonl", BackendConfig::from_id("sa").unwrap())] {
        let mut c = CampaignConfig::new(ProblemKind::Tsp, backend, vec![4, 5], dir.join(name));
        c.instances_per_size = 25;
        points.extend(run_campaign(&c).map_err(err)?.data_points());
    }
    let infeasible = points.iter().filter(|p| !p.feasible).count();
    check(infeasible > 0, "no infeasible bitstrings were produced")?;
    check(points.iter().filter(|p| !p.feasible).all(|p| p.accuracy == 0.0), "an infeasible point has nonzero accuracy")?;

    let groups = build_groups(&points, DEFAULT_MIN_ACCURACY);
    let retained: usize = groups.iter().map(|g| g.points.len()).sum();
    check(retained > 0, "no feasible point retained")?;
    check(groups.iter().all(|g| g.points.iter().all(|p| p.feasible)), "infeasible point retained")?;
    let feasible_only: Vec<DataPoint> = points.iter().filter(|p| p.feasible).cloned().collect();
    let a = score_points(&points, DEFAULT_MIN_ACCURACY, Weights::default()).map_err(err)?;
    let b = score_points(&feasible_only, DEFAULT_MIN_ACCURACY, Weights::default()).map_err(err)?;
    check(a == b, "infeasible points changed the score")?;
    Ok(format!("{infeasible}/{} points infeasible, all accuracy 0 and excluded; {retained} feasible retained", points.len()))
}

fn reproducibility(dir: &Path) -> Outcome {
    let err = |e: quas::QuasError| e.to_string();
    let mut a = CampaignConfig::new(ProblemKind::Ising, BackendConfig::from_id("sa").unwrap(), vec![4, 5, 6], dir.join("r1.jsonl"));
    a.instances_per_size = 5;
    let mut b = a.clone();
    b.output = dir.join("r2.jsonl");
    let fa = run_campaign(&a).map_err(err)?;
    let fb = run_campaign(&b).map_err(err)?;
    let cols = |f: &ResultFile| {
        f.points().map(|p| (p.size, p.instance_index, p.accuracy.to_bits(), p.raw_value.to_bits())).collect::<Vec<_>>()
    };
    check(cols(&fa) == cols(&fb), "accuracy/raw_value columns differ between runs")?;

    score_file(&a.output, ScoreOverrides::default()).map_err(err)?;
    let first = std::fs::read(report_path(&a.output)).map_err(|e| e.to_string())?;
    score_file(&a.output, ScoreOverrides::default()).map_err(err)?;
    let second = std::fs::read(report_path(&a.output)).map_err(|e| e.to_string())?;
    check(first == second, "report bytes differ")?;
    Ok(format!("{} points identical across runs; report {} bytes identical", fa.points().count(), first.len()))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let d = dir.path();
    let criteria: Vec<Criterion<'_>> = vec![
        ("area formula", Duration::from_secs(1), Box::new(area_formula)),
        ("normalization and offset", Duration::from_secs(1), Box::new(normalization)),
        ("pareto oracle", Duration::from_secs(10), Box::new(pareto_oracle)),
        ("fit recovery", Duration::from_secs(5), Box::new(fit_recovery)),
        ("min-accuracy rule", Duration::from_secs(60), Box::new(min_accuracy_rule)),
        ("annealing quality", Duration::from_secs(60), Box::new(annealing_quality)),
        ("qaoa correctness", Duration::from_secs(30), Box::new(qaoa_correctness)),
        ("end-to-end campaign", Duration::from_secs(600), Box::new(move || end_to_end(d))),
        ("tsp infeasibility", Duration::from_secs(60), Box::new(move || tsp_infeasibility(d))),
        ("reproducibility", Duration::from_secs(60), Box::new(move || reproducibility(d))),
    ];

    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > *limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("criterion {:>2} {name:<26} PASS  {msg} ({took:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name:<26} FAIL  {msg} ({took:.2?})", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
