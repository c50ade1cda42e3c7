mod common;

use common::*;
use rand::Rng;
use tdkernel::cnf::CnfFormula;
use tdkernel::graph::{components_within, degeneracy, elimination_width, induced_subgraph};
use tdkernel::reductions::*;
use tdkernel::solver::annotated::conf_vertices;
use tdkernel::solver::domset::gamma_exact;
use tdkernel::solver::sat::sat_bruteforce;
use tdkernel::treedepth::{is_c_modulator, td_exact};
use tdkernel::{Graph, VertexSet};

/// Every labeled graph on `n` vertices with at most `max_m` edges.
fn all_graphs(n: usize, max_m: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .filter(|s| s.count_ones() as usize <= max_m)
        .map(|s| {
            Graph::from_edges(n, (0..pairs.len()).filter(|i| s >> i & 1 == 1).map(|i| pairs[i])).unwrap()
        })
        .collect()
}

fn gamma(g: &Graph) -> usize {
    gamma_exact(g, g.n()).unwrap().unwrap()
}

#[test]
fn subdivision_shifts_domination_number() {
    let mut count = 0;
    for n in 0..=5 {
        for g in all_graphs(n, 6) {
            let before = gamma_brute(&g);
            let inst = ds_subdivision_instance(&g, 0, 1);
            assert_eq!(inst.graph.n(), n + 3 * g.m());
            let after = gamma(&inst.graph);
            if inst.graph.n() <= 16 {
                assert_eq!(after, gamma_brute(&inst.graph));
            }
            for k in 0..=n {
                assert_eq!(before <= k, after <= k + g.m(), "{g:?} k={k}");
            }
            count += 1;
        }
    }
    assert_eq!(count, 1 + 1 + 2 + 8 + 64 + 848);
}

#[test]
fn subdivide_layout() {
    let g = Graph::path(3);
    let h = subdivide(&g, 2);
    assert_eq!(h.n(), 7);
    for (u, v) in [(0, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 2)] {
        assert!(h.has_edge(u, v));
    }
    assert_eq!(h.m(), 6);
    assert_eq!(subdivide(&g, 0), g);
}

#[test]
fn vc_to_sparse_ds_certificates() {
    let mut rng = rng(41);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let k = rng.gen_range(0..=n as i64);
        let out = reduce_vc_ds_deg2(&g, k, None).unwrap();
        out.validate().unwrap();
        assert_eq!(out.k, k + g.m() as i64);
        let order = out.certificate("elimination_order").unwrap();
        assert!(elimination_width(&out.graph, order).unwrap() <= 2);
        assert!(degeneracy(&out.graph).0 <= 2);
        let x = out.modulator().unwrap();
        assert!(g.is_vertex_cover(&x));
        assert_eq!(x.len(), vc_brute(&g));
        if out.graph.n() <= 24 {
            assert!(td_without(&out.graph, &x) <= 3);
        }
        assert!(is_c_modulator(&out.graph, &x, 3).unwrap());
    }
    let not_cover = VertexSet::new();
    assert!(reduce_vc_ds_deg2(&Graph::path(2), 1, Some(&not_cover)).is_err());
}

#[test]
fn cross_composition_is_an_or() {
    let mut rng = rng(42);
    let mut outcomes = [0usize; 2];
    for _ in 0..120 {
        let narrow = rng.gen_bool(0.5);
        let n = if narrow { 1 + rng.gen_bool(0.25) as usize } else { rng.gen_range(1..=4) };
        let m = rng.gen_range(1..=4);
        let t = rng.gen_range(1..=3);
        let formulas: Vec<_> = (0..t)
            .map(|_| if narrow { forbidding_formula(&mut rng, n, m) } else { random_formula(&mut rng, n, m) })
            .collect();
        let out = cross_compose_3sat(&formulas).unwrap();
        out.validate().unwrap();
        let g = &out.graph;
        assert_eq!(g.n(), 3 * n + t * (m + 2) + 1);
        assert_eq!(out.k, (n + t) as i64);
        let any_sat = formulas.iter().any(sat_bruteforce);
        outcomes[any_sat as usize] += 1;
        let fits = gamma_exact(g, n + t).unwrap().is_some();
        assert_eq!(fits, any_sat, "{formulas:?}");

        let order = out.certificate("elimination_order").unwrap();
        assert_eq!(order.len(), g.n());
        assert!(elimination_width(g, order).unwrap() <= 4);
        let m_set = out.modulator().unwrap();
        let rest = VertexSet::range(g.n()).difference(&m_set);
        for comp in components_within(g, &rest) {
            let star = induced_subgraph(g, &comp).unwrap().graph;
            assert_eq!(star.m(), star.n() - 1);
            let centre = star.vertices().max_by_key(|&v| star.degree(v)).unwrap();
            assert_eq!(star.degree(centre), star.n() - 1);
            assert!(td_brute(&star) <= 2);
        }
    }
    assert!(outcomes[0] > 10 && outcomes[1] > 10, "{outcomes:?}");
}

#[test]
fn cross_composition_rejects_mixed_shapes() {
    let a = CnfFormula::new(2, vec![[1, 2, -1]]).unwrap();
    let b = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
    assert!(cross_compose_3sat(&[a, b]).is_err());
    assert!(cross_compose_3sat(&[]).is_err());
}

#[test]
fn lower_bound_family_conflicts() {
    for t in 1..=8 {
        let (g, y) = lower_bound_family(t).unwrap();
        assert_eq!(g.n(), 6 * t + 2);
        assert_eq!(y.len(), 2 * t);
        let all = VertexSet::range(g.n());
        let alpha = alpha_brute_or_exact(&g);
        assert_eq!(alpha, 2 * t + 2);
        assert_eq!(conf_vertices(&g, &all, &y).unwrap(), 1);
        for c in y.iter() {
            let smaller = y.difference(&VertexSet::singleton(c));
            assert_eq!(conf_vertices(&g, &all, &smaller).unwrap(), 0);
        }
        // The a/b spine is a path on 4t + 2 vertices, which bounds the
        // treedepth by ceil(log2(4t + 3)) + 1.
        let td = td_exact(&g).unwrap().0;
        let spine = 4 * t + 2;
        let path_td = (usize::BITS - spine.leading_zeros()) as usize;
        assert!(td <= path_td + 1, "t={t} td={td}");
        if g.n() <= 20 {
            assert_eq!(td, td_brute(&g));
        }
    }
    assert!(lower_bound_family(0).is_err());
}

fn alpha_brute_or_exact(g: &Graph) -> usize {
    let value = tdkernel::solver::mis::alpha_exact(g).unwrap().0;
    if g.n() <= 22 {
        assert_eq!(value, alpha_brute(g));
    }
    value
}

#[test]
fn edge_gadget_matches_vertex_cover() {
    let mut rng = rng(43);
    let mut checked = 0;
    while checked < 150 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, p);
        if !g.isolated_vertices().is_empty() {
            assert!(edge_gadget_vc_to_ds(&g, 0).is_err());
            continue;
        }
        let out = edge_gadget_vc_to_ds(&g, 0).unwrap();
        assert_eq!(out.graph.n(), n + g.m());
        let vc = vc_brute(&g);
        let ds = gamma(&out.graph);
        for k in 0..=n {
            assert_eq!(vc <= k, ds <= k);
        }
        checked += 1;
    }
}

#[test]
fn union_adds_budgets_and_keeps_treedepth() {
    let mut rng = rng(44);
    for _ in 0..50 {
        let parts: Vec<(Graph, i64)> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let n = rng.gen_range(0..=5);
                let p = rng.gen_range(0.2..0.8);
                (random_graph(&mut rng, n, p), rng.gen_range(0..3))
            })
            .collect();
        let (g, k) = compose_disjoint_union(&parts);
        assert_eq!(k, parts.iter().map(|(_, k)| k).sum::<i64>());
        assert_eq!(g.n(), parts.iter().map(|(g, _)| g.n()).sum::<usize>());
        let td = parts.iter().map(|(g, _)| td_brute(g)).max().unwrap();
        assert_eq!(td_brute(&g), td);
        assert_eq!(gamma_brute(&g), parts.iter().map(|(g, _)| gamma_brute(g)).sum::<usize>());
    }
}

#[test]
fn logtd_instance_structure() {
    let out = gen_logtd_instance(1, 2, &[(0, 0), (0, 1)], 1).unwrap();
    let g = &out.graph;
    // 3 original, 2 edges * 3 subdivision vertices, 16 x 16 grid, apex.
    assert_eq!(g.n(), 3 + 6 + 256 + 1);
    assert_eq!(out.k, 1 + 2 + 1);
    assert_eq!(out.modulator_level, Some(4));
    let x = out.modulator().unwrap();
    assert_eq!(x.len(), 1 + 256 + 1);
    let apex = out.certificate("apex").unwrap()[0];
    assert_eq!(g.degree(apex), 256);
    let rest = VertexSet::range(g.n()).difference(&x);
    for comp in components_within(g, &rest) {
        let h = induced_subgraph(g, &comp).unwrap().graph;
        assert!(td_brute(&h) <= 4);
    }
    out.validate().unwrap();
    assert!(gen_logtd_instance(0, 1, &[], 0).is_err());
    assert!(gen_logtd_instance(1, 1, &[(0, 1)], 0).is_err());
}
