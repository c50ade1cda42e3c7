//! Exact treedepth with certificates.
//!
//! For a connected vertex set `S` the search decides `td(S) <= k` by trying
//! every vertex as the root and recursing into the components left behind,
//! `td(S) = 1 + min_v td(S - v)`. Answers are memoized per vertex set, and
//! the degeneracy of `G[S]` plus one serves as a lower bound to cut
//! branches early. The optimum is found by iterative deepening on `k`.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Rooted forest over the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdDecomposition {
    pub parent: Vec<Option<usize>>,
    pub roots: Vec<usize>,
    /// Number of vertices on a longest root-to-leaf path.
    pub height: usize,
}

impl TdDecomposition {
    /// Builds a decomposition from a parent array, deriving roots and height.
    /// Fails if the parent relation contains a cycle or an invalid id.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        let mut depth = vec![0usize; n];
        for v in 0..n {
            depth_of(&parent, v, &mut depth)?;
        }
        let roots = (0..n).filter(|&v| parent[v].is_none()).collect();
        let height = depth.iter().copied().max().unwrap_or(0);
        Ok(Self {
            parent,
            roots,
            height,
        })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Depth of every vertex, roots at depth 1.
    pub fn depths(&self) -> Result<Vec<usize>> {
        let mut depth = vec![0usize; self.parent.len()];
        for v in 0..self.parent.len() {
            depth_of(&self.parent, v, &mut depth)?;
        }
        Ok(depth)
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.parent.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(v);
            }
        }
        children
    }

    pub fn is_ancestor(&self, a: usize, mut v: usize) -> bool {
        let mut steps = 0;
        loop {
            if v == a {
                return true;
            }
            match self.parent[v] {
                Some(p) if steps <= self.parent.len() => {
                    v = p;
                    steps += 1;
                }
                _ => return false,
            }
        }
    }
}

fn depth_of(parent: &[Option<usize>], v: usize, depth: &mut [usize]) -> Result<usize> {
    if depth[v] != 0 {
        return Ok(depth[v]);
    }
    let n = parent.len();
    let mut path = vec![v];
    let mut cur = v;
    loop {
        match parent[cur] {
            None => {
                depth[cur] = 1;
                break;
            }
            Some(p) if p >= n => return Err(Error::InvalidVertex { vertex: p, n }),
            Some(p) => {
                if depth[p] != 0 {
                    break;
                }
                if path.len() > n {
                    return Err(Error::Invariant("parent relation has a cycle".into()));
                }
                path.push(p);
                cur = p;
            }
        }
    }
    while let Some(u) = path.pop() {
        if depth[u] == 0 {
            let p = parent[u].expect("non-root");
            depth[u] = depth[p] + 1;
        }
    }
    Ok(depth[v])
}

/// True iff `d` is a rooted forest on `g`'s vertices whose closure contains
/// every edge of `g` and whose recorded roots and height are accurate.
pub fn verify_decomposition(g: &Graph, d: &TdDecomposition) -> bool {
    if d.parent.len() != g.n() {
        return false;
    }
    let Ok(depth) = d.depths() else {
        return false;
    };
    let roots: Vec<usize> = (0..g.n()).filter(|&v| d.parent[v].is_none()).collect();
    if roots != d.roots {
        return false;
    }
    if depth.iter().copied().max().unwrap_or(0) != d.height {
        return false;
    }
    g.edges().all(|(u, v)| {
        let (hi, lo) = if depth[u] <= depth[v] { (u, v) } else { (v, u) };
        d.is_ancestor(hi, lo)
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Choice {
    /// Set small enough to be laid out as a path in id order.
    Chain,
    Root(usize),
}

#[derive(Clone, Copy, Default)]
struct Entry {
    /// Smallest `k` proven feasible together with the choice that achieved it.
    ok: Option<(usize, Choice)>,
    /// Largest `k` proven infeasible.
    fail: usize,
}

/// Memoizing exact treedepth search over the vertex subsets of one graph.
pub struct TreedepthSolver<'g> {
    g: &'g Graph,
    adj: Vec<BitSet>,
    memo: HashMap<BitSet, Entry>,
    budget: u64,
    nodes: u64,
}

impl<'g> TreedepthSolver<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::with_budget(g, DEFAULT_NODE_BUDGET)
    }

    pub fn with_budget(g: &'g Graph, budget: u64) -> Self {
        Self {
            g,
            adj: g.adjacency_bitsets(),
            memo: HashMap::new(),
            budget,
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn all(&self) -> BitSet {
        BitSet::full(self.g.n())
    }

    /// Components of `G[s]`, ordered by smallest member.
    pub fn components(&self, s: &BitSet) -> Vec<BitSet> {
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

    /// Degeneracy of `G[s]` plus one, a lower bound on `td(G[s])`.
    fn lower_bound(&self, s: &BitSet) -> usize {
        let mut alive = s.clone();
        let mut best = 0;
        while !alive.is_empty() {
            let (v, d) = alive
                .iter()
                .map(|v| (v, self.adj[v].intersection_len(&alive)))
                .min_by_key(|&(v, d)| (d, v))
                .expect("non-empty");
            best = best.max(d);
            alive.remove(v);
        }
        if s.is_empty() {
            0
        } else {
            best + 1
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit {
                what: "treedepth search",
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Decides `td(G[s]) <= k` for a connected, non-empty `s`.
    fn decide(&mut self, s: &BitSet, k: usize) -> Result<bool> {
        let size = s.len();
        if size <= k {
            let e = self.memo.entry(s.clone()).or_default();
            if e.ok.is_none_or(|(ok, _)| ok > size) {
                e.ok = Some((size, Choice::Chain));
            }
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        if let Some(e) = self.memo.get(s) {
            if matches!(e.ok, Some((ok, _)) if ok <= k) {
                return Ok(true);
            }
            if e.fail >= k {
                return Ok(false);
            }
        }
        self.tick()?;
        if self.lower_bound(s) > k {
            self.record_fail(s, k);
            return Ok(false);
        }
        let mut candidates: Vec<(usize, usize)> = s
            .iter()
            .map(|v| (self.adj[v].intersection_len(s), v))
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, v) in candidates {
            let mut rest = s.clone();
            rest.remove(v);
            let mut comps = self.components(&rest);
            comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
            let mut feasible = true;
            for comp in &comps {
                if !self.decide(comp, k - 1)? {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                let e = self.memo.entry(s.clone()).or_default();
                if e.ok.is_none_or(|(ok, _)| ok > k) {
                    e.ok = Some((k, Choice::Root(v)));
                }
                return Ok(true);
            }
        }
        self.record_fail(s, k);
        Ok(false)
    }

    fn record_fail(&mut self, s: &BitSet, k: usize) {
        let e = self.memo.entry(s.clone()).or_default();
        e.fail = e.fail.max(k);
    }

    fn td_connected(&mut self, s: &BitSet) -> Result<usize> {
        let mut k = self.lower_bound(s).max(1);
        if let Some(e) = self.memo.get(s) {
            k = k.max(e.fail + 1);
        }
        loop {
            if self.decide(s, k)? {
                return Ok(k);
            }
            k += 1;
        }
    }

    /// Exact treedepth of `G[s]`.
    pub fn treedepth_of(&mut self, s: &BitSet) -> Result<usize> {
        let mut best = 0;
        for comp in self.components(s) {
            best = best.max(self.td_connected(&comp)?);
        }
        Ok(best)
    }

    /// Whether `td(G[s]) <= c`, stopping at the first component that exceeds it.
    pub fn at_most(&mut self, s: &BitSet, c: usize) -> Result<bool> {
        for comp in self.components(s) {
            if !self.decide(&comp, c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First component of `G[s]` (by smallest member) with treedepth above `c`.
    pub fn first_violating_component(&mut self, s: &BitSet, c: usize) -> Result<Option<BitSet>> {
        for comp in self.components(s) {
            if !self.decide(&comp, c)? {
                return Ok(Some(comp));
            }
        }
        Ok(None)
    }

    /// Optimal decomposition of `G[s]`, as a parent array over all of `g`'s
    /// vertices (vertices outside `s` are left untouched in `parent`).
    fn build(&mut self, s: &BitSet, above: Option<usize>, parent: &mut [Option<usize>]) {
        let (_, choice) = self
            .memo
            .get(s)
            .and_then(|e| e.ok)
            .expect("decomposition requested for undecided set");
        match choice {
            Choice::Chain => {
                let mut prev = above;
                for v in s.iter() {
                    parent[v] = prev;
                    prev = Some(v);
                }
            }
            Choice::Root(root) => {
                parent[root] = above;
                let mut rest = s.clone();
                rest.remove(root);
                for comp in self.components(&rest) {
                    self.build(&comp, Some(root), parent);
                }
            }
        }
    }

    /// Exact treedepth and an optimal decomposition of `G[s]`; the returned
    /// forest covers all of `g`, with vertices outside `s` as isolated roots.
    pub fn decompose(&mut self, s: &BitSet) -> Result<(usize, Vec<Option<usize>>)> {
        let mut parent = vec![None; self.g.n()];
        let mut best = 0;
        for comp in self.components(s) {
            best = best.max(self.td_connected(&comp)?);
            self.build(&comp, None, &mut parent);
        }
        Ok((best, parent))
    }

    /// Root of an optimal decomposition of the connected set `s`.
    pub fn optimal_root(&mut self, s: &BitSet) -> Result<usize> {
        self.td_connected(s)?;
        Ok(match self.memo[s].ok.expect("decided").1 {
            Choice::Chain => s.first().expect("non-empty"),
            Choice::Root(root) => root,
        })
    }

    pub fn whole_graph(&self) -> BitSet {
        self.all()
    }
}

/// Exact treedepth of `g` with an optimal decomposition.
pub fn td_exact(g: &Graph) -> Result<(usize, TdDecomposition)> {
    td_exact_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn td_exact_with_budget(g: &Graph, budget: u64) -> Result<(usize, TdDecomposition)> {
    let mut solver = TreedepthSolver::with_budget(g, budget);
    let all = solver.whole_graph();
    let (td, parent) = solver.decompose(&all)?;
    let d = TdDecomposition::from_parents(parent)?;
    debug_assert_eq!(d.height, td);
    Ok((td, d))
}

/// Whether `td(g - x) <= c`.
pub fn is_c_modulator(g: &Graph, x: &VertexSet, c: usize) -> Result<bool> {
    x.validate(g.n())?;
    let mut solver = TreedepthSolver::new(g);
    let mut rest = solver.whole_graph();
    for v in x.iter() {
        rest.remove(v);
    }
    solver.at_most(&rest, c)
}
