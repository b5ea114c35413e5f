//! Statevector QAOA on Max-Cut: the single-edge landscape, then a full
//! optimize-and-sample run on a six-vertex graph.
//!
//! cargo run --release --example qaoa_maxcut

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8};

use quas::backends::SolveRequest;
use quas::problems::{gen_er_graph, GraphInstance, ProblemInstance};
use quas::qaoa::{expectation, optimize_angles, qaoa_solve, qaoa_state, DiagonalCost, QaoaParams, QaoaSettings};

fn main() -> quas::Result<()> {
    let edge = ProblemInstance::MaxCut(GraphInstance::from_edges(2, &[(0, 1, 1.0)])?).to_qubo();
    let cost = DiagonalCost::from_qubo(&edge, 20)?;
    for (g, b) in [(FRAC_PI_4, FRAC_PI_8), (FRAC_PI_2, FRAC_PI_8)] {
        let state = qaoa_state(&cost, &QaoaParams::new(vec![g], vec![b])?)?;
        println!("single edge  <C>(gamma={g:.4}, beta={b:.4}) = {:.6}", expectation(&state, &cost)?);
    }

    let graph = gen_er_graph(6, 0.5, 9)?;
    let best_cut = (0..1usize << 6)
        .map(|z| graph.cut_value(&(0..6).map(|i| (z >> i & 1) as u8).collect::<Vec<_>>()))
        .fold(0.0, f64::max);
    let qubo = ProblemInstance::MaxCut(graph).to_qubo();
    let cost = DiagonalCost::from_qubo(&qubo, 20)?;
    for layers in 1..=3 {
        let settings = QaoaSettings { layers, ..QaoaSettings::default() };
        let opt = optimize_angles(&qubo, &cost, &settings)?;
        let out = qaoa_solve(&SolveRequest::new(&qubo, 1024, 5), &settings)?;
        println!(
            "ER(6, 0.5) p={layers}: <C> = {:.4} after {} evaluations, best sampled cut {} (optimum {best_cut})",
            opt.expectation, opt.evaluations, out.best_value
        );
    }
    Ok(())
}
