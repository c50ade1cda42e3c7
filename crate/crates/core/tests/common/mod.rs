//! Brute-force oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the library's solvers.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tdkernel::cnf::CnfFormula;
use tdkernel::solver::annotated::AnnotatedInstance;
use tdkernel::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 24, "oracle limited to 24 vertices");
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

/// Independence number by enumerating every vertex subset.
pub fn alpha_brute(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Independence number of `g[within]`.
pub fn alpha_brute_within(g: &Graph, within: &[usize]) -> usize {
    let adj = masks(g);
    let w = within.len();
    (0u32..1 << w)
        .filter(|&s| {
            let set: u32 = (0..w).filter(|i| s >> i & 1 == 1).fold(0, |m, i| m | 1 << within[i]);
            within.iter().all(|&v| set >> v & 1 == 0 || adj[v] & set == 0)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest vertex set with no plain edge and no hyperedge inside.
pub fn alpha_annotated_brute(inst: &AnnotatedInstance) -> usize {
    let g = inst.graph();
    let adj = masks(g);
    let hyper: Vec<u32> = inst
        .hyperedges()
        .iter()
        .map(|h| h.iter().fold(0, |m, v| m | 1 << v))
        .collect();
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .filter(|&s| hyper.iter().all(|&h| h & s != h))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Domination number by increasing subset size.
pub fn gamma_brute(g: &Graph) -> usize {
    let closed: Vec<u32> = masks(g).iter().enumerate().map(|(v, m)| m | 1 << v).collect();
    let full: u32 = if g.n() == 32 { u32::MAX } else { (1 << g.n()) - 1 };
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).filter(|v| s >> v & 1 == 1).fold(0, |m, v| m | closed[v]) == full)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Vertex cover number as `n - alpha`.
pub fn vc_brute(g: &Graph) -> usize {
    g.n() - alpha_brute(g)
}

/// Treedepth from the recursive definition: a connected graph needs one
/// level more than its best single-vertex deletion; components take the max.
pub fn td_brute(g: &Graph) -> usize {
    let adj = masks(g);
    let mut memo = HashMap::new();
    td_rec(&adj, (1u32 << g.n()).wrapping_sub(1) & mask_all(g.n()), &mut memo)
}

fn mask_all(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1 << n) - 1
    }
}

fn td_rec(adj: &[u32], s: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if s == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&s) {
        return v;
    }
    // Split into components.
    let start = s.trailing_zeros();
    let mut comp = 1u32 << start;
    loop {
        let mut grown = comp;
        for (v, &nb) in adj.iter().enumerate() {
            if comp >> v & 1 == 1 {
                grown |= nb & s;
            }
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }
    let value = if comp != s {
        td_rec(adj, comp, memo).max(td_rec(adj, s & !comp, memo))
    } else {
        1 + (0..32)
            .filter(|v| s >> v & 1 == 1)
            .map(|v| td_rec(adj, s & !(1 << v), memo))
            .min()
            .expect("non-empty")
    };
    memo.insert(s, value);
    value
}

/// Treedepth of `g - x`.
pub fn td_without(g: &Graph, x: &VertexSet) -> usize {
    let keep: Vec<usize> = g.vertices().filter(|&v| !x.contains(v)).collect();
    let mut id = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        id[v] = i;
    }
    let mut h = Graph::new(keep.len());
    for (u, v) in g.edges() {
        if id[u] != usize::MAX && id[v] != usize::MAX {
            h.add_edge(id[u], id[v]).unwrap();
        }
    }
    td_brute(&h)
}

/// Smallest `X` with `td(G - X) <= c`, trying sizes in increasing order.
pub fn min_modulator_brute(g: &Graph, c: usize) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&size| {
            (0u32..1 << n).filter(|s| s.count_ones() as usize == size).any(|s| {
                let x = VertexSet::from_vec((0..n).filter(|v| s >> v & 1 == 1).collect());
                td_without(g, &x) <= c
            })
        })
        .expect("V itself works")
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random edges inside the closure of a random forest of height at most
/// `c` on `vertices`; the result has treedepth at most `c` there.
fn plant_shallow(rng: &mut impl Rng, g: &mut Graph, vertices: &[usize], c: usize, p: f64) {
    let mut depth = vec![0usize; vertices.len()];
    let mut parent: Vec<Option<usize>> = vec![None; vertices.len()];
    for i in 0..vertices.len() {
        let choices: Vec<usize> = (0..i).filter(|&j| depth[j] < c).collect();
        if c > 1 && !choices.is_empty() && rng.gen_bool(0.75) {
            let j = choices[rng.gen_range(0..choices.len())];
            parent[i] = Some(j);
            depth[i] = depth[j] + 1;
        } else {
            depth[i] = 1;
        }
    }
    for i in 0..vertices.len() {
        let mut a = parent[i];
        let mut first = true;
        while let Some(j) = a {
            if first || rng.gen_bool(p) {
                g.add_edge(vertices[i], vertices[j]).unwrap();
            }
            first = false;
            a = parent[j];
        }
    }
}

/// Random graph on `n` vertices with a planted `c`-treedepth modulator of
/// size `x_size`, whose vertices are spread over the id range.
pub fn planted_graph(rng: &mut impl Rng, n: usize, x_size: usize, c: usize) -> (Graph, VertexSet) {
    let mut ids: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    let x = VertexSet::from_vec(ids[..x_size].to_vec());
    let r: Vec<usize> = ids[x_size..].to_vec();
    let mut g = Graph::new(n);
    plant_shallow(rng, &mut g, &r, c, 0.6);
    let density = rng.gen_range(0.2..0.7);
    for u in x.iter() {
        for v in 0..n {
            if v != u && rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    (g, x)
}

/// Random annotated instance: planted modulator, random hyperedges of size
/// 1 to 3 inside it, random budget.
pub fn random_annotated(rng: &mut impl Rng, max_n: usize, c: usize) -> AnnotatedInstance {
    let n = rng.gen_range(1..=max_n);
    let x_size = rng.gen_range(0..=n.min(5));
    let (g, x) = planted_graph(rng, n, x_size, c);
    let base = AnnotatedInstance::from_graph(&g, &x, 0, c).unwrap();
    let mut hyperedges = base.hyperedges().to_vec();
    if !x.is_empty() {
        for _ in 0..rng.gen_range(0..=3) {
            let size = rng.gen_range(1..=x.len().min(3));
            let mut pool = x.clone().into_vec();
            for i in (1..pool.len()).rev() {
                pool.swap(i, rng.gen_range(0..=i));
            }
            hyperedges.push(VertexSet::from_vec(pool[..size].to_vec()));
        }
    }
    let k = rng.gen_range(0..=n as i64 + 1);
    AnnotatedInstance::new(base.graph().clone(), x, hyperedges, k, c).unwrap()
}

/// Threshold answer of an annotated instance.
pub fn yes(inst: &AnnotatedInstance) -> bool {
    alpha_annotated_brute(inst) as i64 >= inst.k()
}

/// Random 3-CNF formula with `m` clauses over `n` variables.
pub fn random_formula(rng: &mut impl Rng, n: usize, m: usize) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            [0; 3].map(|_| {
                let v = rng.gen_range(1..=n as i32);
                if rng.gen_bool(0.5) { v } else { -v }
            })
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

/// Every clause rules out one full assignment, so with `m >= 2^n` the
/// formula is often unsatisfiable.
pub fn forbidding_formula(rng: &mut impl Rng, n: usize, m: usize) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            let lits: Vec<i32> = (1..=n as i32).map(|v| if rng.gen_bool(0.5) { v } else { -v }).collect();
            [0, 1, 2].map(|i| lits[i % n])
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}
