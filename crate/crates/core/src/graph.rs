//! Simple undirected graphs on dense vertex ids, plus the handful of
//! structural operations the kernelizer and the generators build on.

use std::collections::BTreeSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Sorted, deduplicated list of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn from_vec(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn singleton(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn range(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_vec(self.iter().chain(other.iter()).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn to_bitset(&self, capacity: usize) -> BitSet {
        BitSet::from_iter(capacity, self.iter())
    }

    /// Checks that every member is a vertex of a graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl From<BitSet> for VertexSet {
    fn from(set: BitSet) -> Self {
        VertexSet(set.iter().collect())
    }
}

impl From<&BitSet> for VertexSet {
    fn from(set: &BitSet) -> Self {
        VertexSet(set.iter().collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Simple undirected graph with vertices `0..n`.
///
/// Edges are kept as sorted adjacency lists; adding an existing edge is a
/// no-op and self-loops are rejected, so the graph is always simple.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.insert_unchecked(v - 1, v);
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.insert_unchecked(0, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        if let Some(labels) = self.labels.as_mut() {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    /// Adds `{u, v}`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.insert_unchecked(u, v))
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                true
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as canonical `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        let n = self.n();
        self.labels.get_or_insert_with(|| vec![String::new(); n])[v] = label.into();
    }

    pub fn adjacency_bitsets(&self) -> Vec<BitSet> {
        self.adj
            .iter()
            .map(|nb| BitSet::from_iter(self.n(), nb.iter().copied()))
            .collect()
    }

    /// Open neighbourhood of a set, restricted to `within`.
    pub fn neighborhood_in(&self, set: &VertexSet, within: &VertexSet) -> VertexSet {
        set.iter()
            .flat_map(|v| self.adj[v].iter().copied())
            .filter(|&u| within.contains(u))
            .collect()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| self.adj[v].iter().all(|&u| !set.contains(u)))
    }

    pub fn is_dominating(&self, set: &VertexSet) -> bool {
        self.vertices()
            .all(|v| set.contains(v) || self.adj[v].iter().any(|&u| set.contains(u)))
    }

    pub fn is_vertex_cover(&self, set: &VertexSet) -> bool {
        self.edges().all(|(u, v)| set.contains(u) || set.contains(v))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Connected components as vertex sets, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, &VertexSet::range(g.n()))
}

/// Components of `g[within]`, ordered by smallest member.
pub fn components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in within.iter() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] && within.contains(u) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.push(VertexSet::from_vec(comp));
    }
    out
}

/// Result of [`induced_subgraph`]: the subgraph plus the id translation.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `original[new_id] = old_id`, strictly increasing.
    pub original: Vec<usize>,
}

impl Induced {
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }

    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }
}

pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Induced> {
    s.validate(g.n())?;
    let original = s.as_slice().to_vec();
    let mut sub = Graph::new(original.len());
    for (new_u, &u) in original.iter().enumerate() {
        for &v in g.neighbors(u) {
            if v > u {
                if let Ok(new_v) = original.binary_search(&v) {
                    sub.insert_unchecked(new_u, new_v);
                }
            }
        }
    }
    if let Some(labels) = g.labels() {
        sub.labels = Some(original.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok(Induced { graph: sub, original })
}

/// Degeneracy by repeated minimum-degree removal, smallest id first on ties.
///
/// Every vertex of the returned order has at most `d` neighbours among the
/// vertices that come after it.
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                queue.remove(&(deg[u], u));
                deg[u] -= 1;
                queue.insert((deg[u], u));
            }
        }
    }
    (d, order)
}

/// Largest number of later neighbours any vertex has when `order` is
/// replayed as an elimination order.
pub fn elimination_width(g: &Graph, order: &[usize]) -> Result<usize> {
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::InvalidVertex { vertex: v, n: g.n() });
        }
        if position[v] != usize::MAX {
            return Err(Error::Invariant(format!("vertex {v} repeated in order")));
        }
        position[v] = i;
    }
    if order.len() != g.n() {
        return Err(Error::Invariant(format!(
            "order has {} vertices, graph has {}",
            order.len(),
            g.n()
        )));
    }
    Ok(order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| position[u] > position[v])
                .count()
        })
        .max()
        .unwrap_or(0))
}

/// Disjoint union; `offsets[i]` is the id of input `i`'s vertex 0.
pub fn disjoint_union(gs: &[Graph]) -> (Graph, Vec<usize>) {
    let total = gs.iter().map(Graph::n).sum();
    let mut out = Graph::new(total);
    let mut offsets = Vec::with_capacity(gs.len());
    let mut offset = 0;
    for g in gs {
        offsets.push(offset);
        for (u, v) in g.edges() {
            out.insert_unchecked(u + offset, v + offset);
        }
        if let Some(labels) = g.labels() {
            for (v, l) in labels.iter().enumerate() {
                out.set_label(v + offset, l.clone());
            }
        }
        offset += g.n();
    }
    (out, offsets)
}
