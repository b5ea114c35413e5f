//! A complete benchmark campaign: run, resume with an extra size, score
//! and export plot data.
//!
//! cargo run --release --example campaign [output-dir]

use quas::backends::BackendConfig;
use quas::harness::{export_plot_data, run_campaign, score_file, CampaignConfig, ResultFile, ScoreOverrides};
use quas::problems::ProblemKind;

fn main() -> quas::Result<()> {
    let out_dir = std::env::args().nth(1).unwrap_or_else(|| "campaign-demo".into());
    std::fs::create_dir_all(&out_dir)?;
    let results = std::path::Path::new(&out_dir).join("maxcut-sa.jsonl");

    let mut config = CampaignConfig::new(ProblemKind::MaxCut, BackendConfig::from_id("sa")?, (4..=8).collect(), &results);
    config.instances_per_size = 10;
    run_campaign(&config)?;
    let first = score_file(&results, ScoreOverrides::default())?;

    // same file, one more size: only the new instances run
    config.sizes.push(9);
    let file = run_campaign(&config)?;
    let report = score_file(&results, ScoreOverrides::default())?;
    println!("sizes 4-8: {:.4}, sizes 4-9: {:.4}", first.total, report.total);
    for s in &report.sizes {
        println!("  n={:>2} retained {:>2} front {:>2} area {:.4}", s.size, s.retained, s.front_points, s.area);
    }

    let bundle = export_plot_data(&report, &ResultFile::read(&results)?, std::path::Path::new(&out_dir).join("plot"))?;
    println!("{} points recorded, {} plot files in {out_dir}/plot", file.points().count(), bundle.files.len());
    Ok(())
}
