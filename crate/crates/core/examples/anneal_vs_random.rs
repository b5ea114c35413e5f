//! Simulated annealing against uniform random sampling on Ising instances,
//! compared with the exhaustive ground state.
//!
//! cargo run --release --example anneal_vs_random

use quas::backends::{random_solve, sa_solve, AnnealSchedule, SolveRequest};
use quas::problems::{gen_ising, ProblemInstance};

fn ground_state(inst: &quas::problems::IsingInstance) -> f64 {
    (0..1usize << inst.n)
        .map(|z| {
            let spins: Vec<i8> = (0..inst.n).map(|i| if z >> i & 1 == 1 { 1 } else { -1 }).collect();
            inst.energy(&spins)
        })
        .fold(f64::INFINITY, f64::min)
}

fn main() -> quas::Result<()> {
    println!("{:>4} {:>10} {:>10} {:>10}", "seed", "exact", "sa", "random");
    for seed in 0..8 {
        let ising = gen_ising(12, seed)?;
        let exact = ground_state(&ising);
        let qubo = ProblemInstance::Ising(ising).to_qubo();
        let schedule = AnnealSchedule::default_for(&qubo);
        let sa = sa_solve(&SolveRequest::new(&qubo, schedule.reads, seed), &schedule)?;
        let rnd = random_solve(&SolveRequest::new(&qubo, 100, seed))?;
        println!("{seed:>4} {exact:>10.4} {:>10.4} {:>10.4}", sa.best_value, rnd.best_value);
    }
    Ok(())
}
