mod common;

use common::ising_ground_energy;
use proptest::prelude::*;
use quas::backends::{random_solve, sa_solve, AnnealSchedule, SolveRequest};
use quas::baselines::{accuracy, heuristic_solve, HeuristicConfig};
use quas::problems::{
    gen_er_graph, gen_ising, gen_tsp, Candidate, Direction, GraphInstance, IsingInstance, ProblemInstance,
    ProblemKind, TspInstance,
};

#[test]
fn anneal_finds_ising_ground_states() {
    let mut hits = 0;
    for seed in 0..25u64 {
        let inst = gen_ising(12, seed).unwrap();
        let optimum = ising_ground_energy(&inst);
        let pi = ProblemInstance::Ising(inst);
        let q = pi.to_qubo();
        let out = sa_solve(&SolveRequest::new(&q, 10, seed), &AnnealSchedule::default_for(&q)).unwrap();
        let value = pi.evaluate(&pi.decode(out.best_bits()).unwrap()).unwrap().value;
        assert!((value - out.best_value).abs() < 1e-9);
        if (value - optimum).abs() <= 0.05 * optimum.abs() {
            hits += 1;
        }
    }
    assert!(hits >= 23, "{hits}/25 within 5%");
}

#[test]
fn anneal_beats_single_random_sample_on_maxcut() {
    let (mut sa, mut rnd) = (0.0, 0.0);
    for seed in 0..25u64 {
        let inst = ProblemKind::MaxCut.generate(10, seed).unwrap();
        let heur = heuristic_solve(&inst, HeuristicConfig::default().budget_for(10), seed).unwrap().value;
        let q = inst.to_qubo();
        let a = sa_solve(&SolveRequest::new(&q, 10, seed), &AnnealSchedule::default_for(&q)).unwrap();
        let b = random_solve(&SolveRequest::new(&q, 1, seed)).unwrap();
        sa += accuracy(a.best_value, heur, Direction::Maximize).unwrap();
        rnd += accuracy(b.best_value, heur, Direction::Maximize).unwrap();
    }
    assert!(sa > rnd, "{sa} vs {rnd}");
}

#[test]
fn generators_are_pure() {
    for kind in [ProblemKind::MaxCut, ProblemKind::Ising, ProblemKind::Tsp] {
        assert_eq!(kind.generate(6, 42).unwrap(), kind.generate(6, 42).unwrap());
        assert_ne!(kind.generate(6, 42).unwrap(), kind.generate(6, 43).unwrap());
    }
}

#[test]
fn er_edge_count_within_binomial_bounds() {
    let g = gen_er_graph(30, 0.5, 7).unwrap();
    let pairs = 435.0;
    let sigma = (pairs * 0.25f64).sqrt();
    assert!((g.edges.len() as f64 - pairs / 2.0).abs() <= 4.0 * sigma);
}

#[test]
fn maxcut_qubo_equals_cut_exhaustively() {
    for n in 2..=6 {
        let g = gen_er_graph(n, 0.5, n as u64).unwrap();
        let q = ProblemInstance::MaxCut(g.clone()).to_qubo();
        for z in 0..1usize << n {
            let bits: Vec<u8> = (0..n).map(|i| (z >> i & 1) as u8).collect();
            assert_eq!(q.objective(&bits).unwrap(), g.cut_value(&bits));
        }
    }
}

#[test]
fn tsp_decode_rejects_broken_one_hot() {
    let t = gen_tsp(4, 1).unwrap();
    let inst = ProblemInstance::Tsp(t.clone());
    assert!(!inst.decode(&[0; 16]).unwrap().feasible);
    // cities 0 and 1 both at position 0, nobody at position 1
    let mut bits = inst.encode(&Candidate::tour(vec![0, 1, 2, 3])).unwrap();
    bits[t.var_index(1, 1)] = 0;
    bits[t.var_index(1, 0)] = 1;
    let cand = inst.decode(&bits).unwrap();
    assert!(!cand.feasible);
    assert!(!inst.evaluate(&cand).unwrap().feasible);
}

fn spins(n: usize) -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { 1 } else { -1 }), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ising_without_field_is_flip_symmetric(seed in any::<u64>(), s in spins(7)) {
        let base = gen_ising(7, seed).unwrap();
        let couplings: Vec<_> = base.couplings.iter().map(|c| (c.i, c.j, c.value)).collect();
        let inst = IsingInstance::new(7, &couplings, vec![0.0; 7], 1.0).unwrap();
        let flipped: Vec<i8> = s.iter().map(|x| -x).collect();
        prop_assert!((inst.energy(&s) - inst.energy(&flipped)).abs() < 1e-12);
    }

    #[test]
    fn tour_length_invariant_under_rotation_and_reversal(seed in any::<u64>(), shift in 0usize..6) {
        let t = gen_tsp(6, seed).unwrap();
        let tour: Vec<usize> = (0..6).collect();
        let mut rotated = tour.clone();
        rotated.rotate_left(shift);
        let reversed: Vec<usize> = tour.iter().rev().copied().collect();
        prop_assert!((t.tour_length(&tour) - t.tour_length(&rotated)).abs() < 1e-12);
        prop_assert!((t.tour_length(&tour) - t.tour_length(&reversed)).abs() < 1e-12);
    }

    #[test]
    fn tsp_encode_decode_round_trip(seed in any::<u64>(), perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let inst = ProblemInstance::Tsp(gen_tsp(5, seed).unwrap());
        let cand = Candidate::tour(perm);
        let bits = inst.encode(&cand).unwrap();
        prop_assert_eq!(inst.decode(&bits).unwrap(), cand.clone());
        prop_assert!((inst.to_qubo().objective(&bits).unwrap() - inst.evaluate(&cand).unwrap().value).abs() < 1e-9);
    }

    #[test]
    fn accuracy_is_monotone(heur in 0.1f64..100.0, s1 in -100.0f64..200.0, ds in 0.0f64..50.0) {
        let max_lo = accuracy(s1, heur, Direction::Maximize).unwrap();
        let max_hi = accuracy(s1 + ds, heur, Direction::Maximize).unwrap();
        prop_assert!(max_hi >= max_lo);
        let min_lo = accuracy(s1 + ds, -heur, Direction::Minimize).unwrap();
        let min_hi = accuracy(s1, -heur, Direction::Minimize).unwrap();
        prop_assert!(min_hi >= min_lo);
        prop_assert_eq!(accuracy(heur, heur, Direction::Maximize).unwrap(), 1.0);
        prop_assert_eq!(accuracy(-heur, -heur, Direction::Minimize).unwrap(), 1.0);
    }

    #[test]
    fn accuracy_scale_covariant(seed in 0u64..1000, c in 0.1f64..10.0) {
        let g = gen_er_graph(8, 0.5, seed).unwrap();
        prop_assume!(!g.edges.is_empty());
        let scaled: Vec<_> = g.edges.iter().map(|e| (e.u, e.v, c * e.weight)).collect();
        let h = GraphInstance::from_edges(8, &scaled).unwrap();
        let side: Vec<u8> = (0..8).map(|i| ((seed >> i) & 1) as u8).collect();
        let best = (0..1usize << 8)
            .map(|z| g.cut_value(&(0..8).map(|i| (z >> i & 1) as u8).collect::<Vec<_>>()))
            .fold(0.0, f64::max);
        let a1 = accuracy(g.cut_value(&side), best, Direction::Maximize).unwrap();
        let a2 = accuracy(h.cut_value(&side), c * best, Direction::Maximize).unwrap();
        prop_assert!((a1 - a2).abs() < 1e-12);

        let t = gen_tsp(5, seed).unwrap();
        let d: Vec<Vec<f64>> = t.distance.iter().map(|r| r.iter().map(|x| c * x).collect()).collect();
        let t2 = TspInstance::from_matrix(d).unwrap();
        let (tour, other) = (vec![0, 1, 2, 3, 4], vec![0, 2, 4, 1, 3]);
        let b1 = accuracy(t.tour_length(&other), t.tour_length(&tour), Direction::Minimize).unwrap();
        let b2 = accuracy(t2.tour_length(&other), t2.tour_length(&tour), Direction::Minimize).unwrap();
        prop_assert!((b1 - b2).abs() < 1e-12);
    }

    #[test]
    fn heuristic_and_backends_deterministic(seed in any::<u64>()) {
        let inst = ProblemKind::MaxCut.generate(7, seed).unwrap();
        let budget = HeuristicConfig::default().budget_for(7);
        prop_assert_eq!(heuristic_solve(&inst, budget, 1).unwrap().candidate, heuristic_solve(&inst, budget, 1).unwrap().candidate);
        let q = inst.to_qubo();
        let req = SolveRequest::new(&q, 3, seed);
        let sched = AnnealSchedule::default_for(&q);
        prop_assert_eq!(sa_solve(&req, &sched).unwrap().best_candidate, sa_solve(&req, &sched).unwrap().best_candidate);
        prop_assert_eq!(random_solve(&req).unwrap().best_candidate, random_solve(&req).unwrap().best_candidate);
    }
}
