//! Runs the classical reference heuristic and turns solver values into
//! the accuracy KPI.
//!
//! cargo run --example heuristic_accuracy

use quas::baselines::{accuracy, accuracy_kpi, heuristic_solve, HeuristicConfig};
use quas::problems::{Direction, ProblemKind};

fn main() -> quas::Result<()> {
    let config = HeuristicConfig::default();
    for kind in [ProblemKind::MaxCut, ProblemKind::Ising, ProblemKind::Tsp] {
        let inst = kind.generate(10, 7)?;
        let result = heuristic_solve(&inst, config.budget_for(10), 1)?;
        println!("{}: S_heur = {:.4} in {:.2e} s", config.identity(kind), result.value, result.elapsed);
    }

    // maximization and minimization accuracies
    println!("cut 9 vs heuristic 10     -> {:.2}", accuracy(9.0, 10.0, Direction::Maximize)?);
    println!("energy -8 vs heuristic -10 -> {:.2}", accuracy(-8.0, -10.0, Direction::Minimize)?);
    println!("beating the heuristic      -> {:.2}", accuracy(11.0, 10.0, Direction::Maximize)?);
    println!("infeasible tour            -> {:.2}", accuracy_kpi(3.0, 4.0, Direction::Minimize, false));
    Ok(())
}
