//! Exact maximum independent set.
//!
//! Two engines that share nothing but the graph type:
//!
//! * a weighted branch and bound on the false-twin quotient of the graph
//!   (vertices with identical open neighbourhoods collapse into one vertex
//!   weighted by the class size), with simplicial and domination
//!   reductions, component splitting and a greedy clique-cover bound;
//! * a dynamic program over a treedepth decomposition that, for every node,
//!   tracks which vertices on the root path are in the partial solution.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::treedepth::{td_exact, TdDecomposition};

pub const DEFAULT_IS_BUDGET: u64 = 20_000_000;

const MEMO_LIMIT: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsEngine {
    BranchAndBound,
    TreedepthDp,
    /// Runs both engines and fails if they disagree.
    CrossCheck,
}

/// `alpha(g)` and a maximum independent set, by branch and bound.
pub fn alpha_exact(g: &Graph) -> Result<(usize, VertexSet)> {
    alpha_branch_and_bound(g, DEFAULT_IS_BUDGET)
}

pub fn alpha_with(g: &Graph, engine: IsEngine) -> Result<(usize, VertexSet)> {
    match engine {
        IsEngine::BranchAndBound => alpha_exact(g),
        IsEngine::TreedepthDp => {
            let (_, d) = td_exact(g)?;
            Ok(alpha_treedepth_dp(g, &d, &BitSet::new(g.n())))
        }
        IsEngine::CrossCheck => {
            let bnb = alpha_exact(g)?;
            let dp = alpha_with(g, IsEngine::TreedepthDp)?;
            if bnb.0 != dp.0 {
                return Err(Error::Invariant(format!(
                    "IS engines disagree: branch and bound {} vs treedepth DP {}",
                    bnb.0, dp.0
                )));
            }
            Ok(bnb)
        }
    }
}

pub fn alpha_branch_and_bound(g: &Graph, budget: u64) -> Result<(usize, VertexSet)> {
    // Group false twins by their neighbour lists.
    let mut class_of: HashMap<&[usize], usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut class = vec![0; g.n()];
    for v in g.vertices() {
        let id = *class_of.entry(g.neighbors(v)).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[id].push(v);
        class[v] = id;
    }
    let q = members.len();
    let mut adj = vec![BitSet::new(q); q];
    for (a, group) in members.iter().enumerate() {
        for &u in g.neighbors(group[0]) {
            adj[a].insert(class[u]);
        }
    }
    let weight = members.iter().map(|m| m.len() as u64).collect();
    let mut solver = WeightedMis {
        adj,
        weight,
        memo: HashMap::new(),
        nodes: 0,
        budget,
    };
    let (value, chosen) = solver.solve(BitSet::full(q))?;
    let witness: VertexSet = chosen
        .into_iter()
        .flat_map(|c| members[c].iter().copied())
        .collect();
    debug_assert_eq!(witness.len() as u64, value);
    Ok((value as usize, witness))
}

struct WeightedMis {
    adj: Vec<BitSet>,
    weight: Vec<u64>,
    memo: HashMap<BitSet, (u64, Vec<usize>)>,
    nodes: u64,
    budget: u64,
}

impl WeightedMis {
    fn is_clique(&self, set: &BitSet) -> bool {
        set.iter().all(|x| {
            let mut others = set.clone();
            others.remove(x);
            others.is_subset(&self.adj[x])
        })
    }

    fn components(&self, s: &BitSet) -> Vec<BitSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = BitSet::new(s.capacity());
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = BitSet::new(s.capacity());
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(&rest);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Greedy weighted clique cover; the sum of the heaviest vertex of each
    /// clique bounds the weight of any independent set.
    fn upper_bound(&self, alive: &BitSet) -> u64 {
        let mut order: Vec<usize> = alive.iter().collect();
        order.sort_by(|&a, &b| self.weight[b].cmp(&self.weight[a]).then(a.cmp(&b)));
        let mut cliques: Vec<BitSet> = Vec::new();
        let mut bound = 0;
        for v in order {
            match cliques.iter_mut().find(|common| common.contains(v)) {
                Some(common) => common.intersect_with(&self.adj[v]),
                None => {
                    bound += self.weight[v];
                    cliques.push(self.adj[v].intersection(alive));
                }
            }
        }
        bound
    }

    /// Applies simplicial and domination reductions until none fires.
    fn reduce(&self, alive: &mut BitSet, taken: &mut Vec<usize>) -> u64 {
        let mut gained = 0;
        loop {
            let mut changed = false;
            let vertices: Vec<usize> = alive.iter().collect();
            for &v in &vertices {
                if !alive.contains(v) {
                    continue;
                }
                let nb = self.adj[v].intersection(alive);
                let heaviest = nb.iter().map(|u| self.weight[u]).max().unwrap_or(0);
                if self.weight[v] >= heaviest && self.is_clique(&nb) {
                    taken.push(v);
                    gained += self.weight[v];
                    alive.difference_with(&nb);
                    alive.remove(v);
                    changed = true;
                    continue;
                }
                // v is dominated by a neighbour u with N[u] inside N[v].
                let mut closed_v = nb.clone();
                closed_v.insert(v);
                let dominated = nb.iter().any(|u| {
                    if self.weight[u] < self.weight[v] {
                        return false;
                    }
                    let mut closed_u = self.adj[u].intersection(alive);
                    closed_u.insert(u);
                    closed_u.is_subset(&closed_v)
                });
                if dominated {
                    alive.remove(v);
                    changed = true;
                }
            }
            if !changed {
                return gained;
            }
        }
    }

    fn solve(&mut self, alive: BitSet) -> Result<(u64, Vec<usize>)> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit {
                what: "independent set search",
                budget: self.budget,
            });
        }
        let mut alive = alive;
        let mut taken = Vec::new();
        let mut total = self.reduce(&mut alive, &mut taken);
        if alive.is_empty() {
            return Ok((total, taken));
        }
        let comps = self.components(&alive);
        if comps.len() > 1 {
            for comp in comps {
                let (w, set) = self.solve(comp)?;
                total += w;
                taken.extend(set);
            }
            return Ok((total, taken));
        }
        if let Some((w, set)) = self.memo.get(&alive) {
            taken.extend(set.iter().copied());
            return Ok((total + w, taken));
        }
        let v = alive
            .iter()
            .max_by(|&a, &b| {
                let da = self.adj[a].intersection_len(&alive);
                let db = self.adj[b].intersection_len(&alive);
                da.cmp(&db).then(b.cmp(&a))
            })
            .expect("non-empty");
        let mut without_closed = alive.difference(&self.adj[v]);
        without_closed.remove(v);
        let (w_in, mut best_set) = self.solve(without_closed)?;
        let mut best = w_in + self.weight[v];
        best_set.push(v);
        let mut without_v = alive.clone();
        without_v.remove(v);
        if self.upper_bound(&without_v) > best {
            let (w_out, set_out) = self.solve(without_v)?;
            if w_out > best {
                best = w_out;
                best_set = set_out;
            }
        }
        if self.memo.len() >= MEMO_LIMIT {
            self.memo.clear();
        }
        self.memo.insert(alive, (best, best_set.clone()));
        taken.extend(best_set);
        Ok((total + best, taken))
    }
}

/// Maximum independent set avoiding `forbidden`, by dynamic programming
/// over the decomposition `d` of `g`.
///
/// The cost is `O(n * 2^height)`: every node is visited once per
/// independent choice of its ancestors.
pub fn alpha_treedepth_dp(g: &Graph, d: &TdDecomposition, forbidden: &BitSet) -> (usize, VertexSet) {
    let children = d.children();
    let adj = g.adjacency_bitsets();
    let mut chosen = BitSet::new(g.n());
    let mut total = 0;
    let mut witness = Vec::new();
    for &root in &d.roots {
        let (value, set) = subtree(root, &children, &adj, forbidden, &mut chosen);
        total += value;
        witness.extend(set);
    }
    (total, VertexSet::from_vec(witness))
}

fn subtree(
    v: usize,
    children: &[Vec<usize>],
    adj: &[BitSet],
    forbidden: &BitSet,
    chosen: &mut BitSet,
) -> (usize, Vec<usize>) {
    let mut skip_value = 0;
    let mut skip_set = Vec::new();
    for &c in &children[v] {
        let (value, set) = subtree(c, children, adj, forbidden, chosen);
        skip_value += value;
        skip_set.extend(set);
    }
    if forbidden.contains(v) || adj[v].intersects(chosen) {
        return (skip_value, skip_set);
    }
    chosen.insert(v);
    let mut take_value = 1;
    let mut take_set = vec![v];
    for &c in &children[v] {
        let (value, set) = subtree(c, children, adj, forbidden, chosen);
        take_value += value;
        take_set.extend(set);
    }
    chosen.remove(v);
    if take_value > skip_value {
        (take_value, take_set)
    } else {
        (skip_value, skip_set)
    }
}
