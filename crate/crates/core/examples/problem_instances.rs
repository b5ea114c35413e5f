//! Generates one instance of each problem and checks that its QUBO agrees
//! with the native objective on a few assignments.
//!
//! cargo run --example problem_instances

use quas::problems::{Candidate, ProblemKind};

fn main() -> quas::Result<()> {
    for kind in [ProblemKind::MaxCut, ProblemKind::Ising, ProblemKind::Tsp] {
        let inst = kind.generate(5, 42)?;
        let qubo = inst.to_qubo();
        println!(
            "{kind}: n = {}, {} QUBO variables, {} quadratic terms, {:?}",
            inst.size(),
            qubo.m,
            qubo.quadratic.len(),
            qubo.direction
        );

        let candidate = match kind {
            ProblemKind::MaxCut => Candidate::bits(vec![1, 0, 1, 0, 0]),
            ProblemKind::Ising => Candidate::spins(vec![1, -1, -1, 1, 1]),
            ProblemKind::Tsp => Candidate::tour(vec![0, 3, 1, 4, 2]),
        };
        let native = inst.evaluate(&candidate)?;
        let via_qubo = qubo.objective(&inst.encode(&candidate)?)?;
        println!("  native {:.6}  qubo {:.6}", native.value, via_qubo);
    }

    // a bitstring that is not a permutation matrix is infeasible
    let tsp = ProblemKind::Tsp.generate(4, 1)?;
    let decoded = tsp.decode(&[0; 16])?;
    println!("all-zero TSP bits feasible: {}", decoded.feasible);
    Ok(())
}
