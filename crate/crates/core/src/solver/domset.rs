//! Exact dominating set for small graphs.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{components, induced_subgraph, Graph, VertexSet};

pub const DEFAULT_DS_BUDGET: u64 = 50_000_000;

/// `gamma(g)` if it is at most `kmax`.
pub fn gamma_exact(g: &Graph, kmax: usize) -> Result<Option<usize>> {
    Ok(dominating_set_exact(g, kmax)?.map(|s| s.len()))
}

/// A minimum dominating set if `gamma(g) <= kmax`.
///
/// Components are solved independently. Within a component, sizes are
/// tried in increasing order up to the greedy solution's size.
pub fn dominating_set_exact(g: &Graph, kmax: usize) -> Result<Option<VertexSet>> {
    let mut nodes = 0;
    let mut chosen = Vec::new();
    for comp in components(g) {
        let left = match kmax.checked_sub(chosen.len()) {
            Some(left) => left,
            None => return Ok(None),
        };
        let induced = induced_subgraph(g, &comp)?;
        match component_ds(&induced.graph, left, &mut nodes)? {
            Some(set) => chosen.extend(set.into_iter().map(|v| induced.original[v])),
            None => return Ok(None),
        }
    }
    let set = VertexSet::from_vec(chosen);
    debug_assert!(g.is_dominating(&set));
    Ok((set.len() <= kmax).then_some(set))
}

fn closed_neighborhoods(g: &Graph) -> Vec<BitSet> {
    let mut closed = g.adjacency_bitsets();
    for (v, set) in closed.iter_mut().enumerate() {
        set.insert(v);
    }
    closed
}

/// Repeatedly takes the vertex dominating the most new vertices.
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    let closed = closed_neighborhoods(g);
    let mut undominated = BitSet::full(g.n());
    let mut chosen = Vec::new();
    while !undominated.is_empty() {
        let best = g
            .vertices()
            .max_by(|&a, &b| {
                let ga = closed[a].intersection_len(&undominated);
                let gb = closed[b].intersection_len(&undominated);
                ga.cmp(&gb).then(b.cmp(&a))
            })
            .expect("non-empty");
        undominated.difference_with(&closed[best]);
        chosen.push(best);
    }
    VertexSet::from_vec(chosen)
}

fn component_ds(g: &Graph, kmax: usize, nodes: &mut u64) -> Result<Option<Vec<usize>>> {
    let greedy = greedy_dominating_set(g);
    let mut search = DsSearch {
        closed: closed_neighborhoods(g),
        chosen: Vec::new(),
        nodes,
    };
    for k in 0..greedy.len().min(kmax + 1) {
        let undominated = BitSet::full(g.n());
        let allowed = BitSet::full(g.n());
        if search.extend(undominated, allowed, k)? {
            return Ok(Some(search.chosen));
        }
    }
    Ok((greedy.len() <= kmax).then(|| greedy.into_vec()))
}

struct DsSearch<'n> {
    closed: Vec<BitSet>,
    chosen: Vec<usize>,
    nodes: &'n mut u64,
}

impl DsSearch<'_> {
    /// Whether `undominated` can be dominated by `left` more vertices from
    /// `allowed`; on success `chosen` holds the extension.
    fn extend(&mut self, undominated: BitSet, mut allowed: BitSet, left: usize) -> Result<bool> {
        *self.nodes += 1;
        if *self.nodes > DEFAULT_DS_BUDGET {
            return Err(Error::ResourceLimit {
                what: "dominating set search",
                budget: DEFAULT_DS_BUDGET,
            });
        }
        if undominated.is_empty() {
            return Ok(true);
        }
        if left == 0 {
            return Ok(false);
        }
        let max_gain = allowed
            .iter()
            .map(|w| self.closed[w].intersection_len(&undominated))
            .max()
            .unwrap_or(0);
        if max_gain == 0 || undominated.len().div_ceil(max_gain) > left {
            return Ok(false);
        }
        // Branch on the undominated vertex with the fewest candidates.
        let candidates = undominated
            .iter()
            .map(|u| self.closed[u].intersection(&allowed))
            .min_by_key(BitSet::len)
            .expect("non-empty");
        let mut order: Vec<usize> = candidates.iter().collect();
        order.sort_by(|&a, &b| {
            let ga = self.closed[a].intersection_len(&undominated);
            let gb = self.closed[b].intersection_len(&undominated);
            gb.cmp(&ga).then(a.cmp(&b))
        });
        for w in order {
            self.chosen.push(w);
            if self.extend(undominated.difference(&self.closed[w]), allowed.clone(), left - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            // Later branches never use w.
            allowed.remove(w);
        }
        Ok(false)
    }
}
