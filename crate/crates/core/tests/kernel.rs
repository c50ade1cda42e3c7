mod common;

use common::*;
use tdkernel::kernel::*;
use tdkernel::modulator::ModulatorMode;
use tdkernel::solver::annotated::alpha_annotated;
use tdkernel::solver::mis::alpha_exact;
use tdkernel::{Graph, VertexSet};

/// Kernel outputs outgrow enumeration; small ones are still enumerated,
/// larger ones go to the branch-and-bound solver.
fn alpha_of(g: &Graph) -> i64 {
    let value = alpha_exact(g).unwrap().0;
    if g.n() <= 20 {
        assert_eq!(value, alpha_brute(g));
    }
    value as i64
}

#[test]
fn kernelize_preserves_answers() {
    let mut rng = rng(11);
    let mut fired = [0usize; 4];
    for round in 0..400 {
        let c = 1 + round % 3;
        let inst = random_annotated(&mut rng, 12, c);
        let (out, trace) = kernelize(&inst).unwrap();
        assert!(out.r().is_empty());
        assert!(out.k() <= inst.k());
        assert_eq!(trace.replay_k(), out.k());
        assert!(trace.bound_holds(), "{trace:?}");
        assert_eq!(yes(&out), yes(&inst), "round {round}: {inst:?}\n{trace:?}");
        for e in &trace.events {
            fired[match e {
                KernelEvent::Rule1 { .. } => 0,
                KernelEvent::Rule2 { .. } => 1,
                KernelEvent::Rule3 { .. } => 2,
                KernelEvent::Lift { .. } => 3,
            }] += 1;
        }
    }
    println!("rule applications: {fired:?}");
    assert!(fired.iter().all(|&f| f > 0), "{fired:?}");
}

#[test]
fn each_rule_preserves_answers() {
    let mut rng = rng(12);
    for round in 0..300 {
        let c = 1 + round % 3;
        let inst = random_annotated(&mut rng, 12, c);
        let expected = yes(&inst);
        for rule in [rule1, rule2, rule3] {
            let (out, _) = rule(&inst).unwrap();
            assert_eq!(yes(&out), expected, "round {round}: {inst:?}");
        }
        let lifted = lift_roots_unchecked(&inst).unwrap();
        assert_eq!(yes(&lifted), expected);
        lifted.validate().unwrap();
    }
}

#[test]
fn alpha_annotated_matches_enumeration() {
    let mut rng = rng(13);
    for round in 0..300 {
        let inst = random_annotated(&mut rng, 14, 1 + round % 3);
        let (value, witness) = alpha_annotated(&inst).unwrap();
        assert_eq!(value, alpha_annotated_brute(&inst));
        assert!(inst.is_solution(&witness));
        assert_eq!(witness.len(), value);
    }
}

#[test]
fn pipeline_matches_brute_force() {
    let mut rng = rng(14);
    for round in 0..300 {
        let c = 1 + round % 3;
        let n = rand::Rng::gen_range(&mut rng, 1..=12);
        let (g, x) = planted_graph(&mut rng, n, n.min(3), c);
        let alpha = alpha_brute(&g) as i64;
        let k = rand::Rng::gen_range(&mut rng, 0..=n as i64);
        let given = if round % 2 == 0 { Some(&x) } else { None };
        let out = full_pipeline(&g, k, c, given, ModulatorMode::Greedy).unwrap();
        assert_eq!(alpha_of(&out.graph) >= out.k, alpha >= k, "round {round}");
    }
}

#[test]
fn plain_encoding_preserves_answers() {
    let mut rng = rng(15);
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut rng, 0..=4usize);
        let m = rand::Rng::gen_range(&mut rng, 0..=2usize);
        let mut hyperedges = Vec::new();
        for _ in 0..m {
            if n == 0 {
                break;
            }
            let set: Vec<usize> = (0..n).filter(|_| rand::Rng::gen_bool(&mut rng, 0.5)).collect();
            if !set.is_empty() {
                hyperedges.push(VertexSet::from_vec(set));
            }
        }
        let k = rand::Rng::gen_range(&mut rng, -1..=n as i64 + 1);
        let inst = tdkernel::solver::annotated::AnnotatedInstance::new(
            Graph::new(n),
            VertexSet::range(n),
            hyperedges,
            k,
            0,
        )
        .unwrap();
        let (g, kp) = annotated_to_plain(&inst).unwrap();
        assert_eq!(g.n(), 3 * n + n * inst.hyperedge_volume());
        assert_eq!(alpha_of(&g) >= kp, yes(&inst), "{inst:?}");
    }
}
