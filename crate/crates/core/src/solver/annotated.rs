//! Annotated hypergraph instances and the conflict measure on them.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{components_within, induced_subgraph, Graph, VertexSet};
use crate::solver::mis::{alpha_exact, alpha_treedepth_dp};
use crate::treedepth::{is_c_modulator, td_exact, TdDecomposition};

/// Independent Set instance on `V = X ⊎ R` with hyperedges inside `X`.
///
/// Plain edges join `X` to `R` or `R` to `R`; any constraint between two
/// modulator vertices lives in `hyperedges`. A solution is a vertex set
/// containing no plain edge and no hyperedge entirely. `k` is signed since
/// reductions may drive it below zero, which makes the instance trivially
/// a yes-instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedInstance {
    graph: Graph,
    x: VertexSet,
    hyperedges: Vec<VertexSet>,
    k: i64,
    c: usize,
    in_x: Vec<bool>,
}

impl AnnotatedInstance {
    /// Checks the structural invariants. The treedepth bound on `G[R]` is
    /// checked by [`AnnotatedInstance::validate`].
    pub fn new(
        graph: Graph,
        x: VertexSet,
        hyperedges: Vec<VertexSet>,
        k: i64,
        c: usize,
    ) -> Result<Self> {
        x.validate(graph.n())?;
        let mut in_x = vec![false; graph.n()];
        for v in x.iter() {
            in_x[v] = true;
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| in_x[u] && in_x[v]) {
            return Err(Error::Invariant(format!(
                "plain edge {{{u},{v}}} has both endpoints in the modulator"
            )));
        }
        for h in &hyperedges {
            if h.is_empty() {
                return Err(Error::Invariant("empty hyperedge".into()));
            }
            if let Some(v) = h.iter().find(|&v| v >= graph.n() || !in_x[v]) {
                return Err(Error::Invariant(format!(
                    "hyperedge {h:?} leaves the modulator at vertex {v}"
                )));
            }
        }
        let mut hyperedges = hyperedges;
        hyperedges.sort();
        hyperedges.dedup();
        Ok(Self {
            graph,
            x,
            hyperedges,
            k,
            c,
            in_x,
        })
    }

    /// Wraps a plain instance: edges inside `x` become size-2 hyperedges.
    pub fn from_graph(g: &Graph, x: &VertexSet, k: i64, c: usize) -> Result<Self> {
        x.validate(g.n())?;
        let mut plain = Graph::new(g.n());
        let mut hyperedges = Vec::new();
        for (u, v) in g.edges() {
            if x.contains(u) && x.contains(v) {
                hyperedges.push(VertexSet::from_vec(vec![u, v]));
            } else {
                plain.add_edge(u, v)?;
            }
        }
        if let Some(labels) = g.labels() {
            for (v, l) in labels.iter().enumerate() {
                plain.set_label(v, l.clone());
            }
        }
        Self::new(plain, x.clone(), hyperedges, k, c)
    }

    /// Full invariant check, including `td(G[R]) <= c`.
    pub fn validate(&self) -> Result<()> {
        Self::new(
            self.graph.clone(),
            self.x.clone(),
            self.hyperedges.clone(),
            self.k,
            self.c,
        )?;
        if !is_c_modulator(&self.graph, &self.x, self.c)? {
            return Err(Error::Invariant(format!(
                "td(G[R]) exceeds the level c = {}",
                self.c
            )));
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn x(&self) -> &VertexSet {
        &self.x
    }

    pub fn r(&self) -> VertexSet {
        self.graph.vertices().filter(|&v| !self.in_x[v]).collect()
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.in_x[v]
    }

    pub fn hyperedges(&self) -> &[VertexSet] {
        &self.hyperedges
    }

    /// Total size of all hyperedges.
    pub fn hyperedge_volume(&self) -> usize {
        self.hyperedges.iter().map(VertexSet::len).sum()
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = k;
        self
    }

    pub fn with_c(mut self, c: usize) -> Self {
        self.c = c;
        self
    }

    /// Components of `G[R]`, ordered by smallest member.
    pub fn r_components(&self) -> Vec<VertexSet> {
        components_within(&self.graph, &self.r())
    }

    /// Whether `set` contains some hyperedge entirely.
    pub fn contains_hyperedge(&self, set: &VertexSet) -> bool {
        self.hyperedges.iter().any(|h| h.is_subset(set))
    }

    pub fn is_solution(&self, set: &VertexSet) -> bool {
        self.graph.is_independent(set) && !self.contains_hyperedge(set)
    }

    /// Keeps the vertices in `keep` (with their edges and the hyperedges
    /// they fully contain). Returns the instance and the kept-id table.
    pub fn restrict(&self, keep: &VertexSet) -> Result<(Self, Vec<usize>)> {
        let induced = induced_subgraph(&self.graph, keep)?;
        let x = self
            .x
            .iter()
            .filter_map(|v| induced.new_id(v))
            .collect();
        let hyperedges = self
            .hyperedges
            .iter()
            .filter(|h| h.is_subset(keep))
            .map(|h| h.iter().map(|v| induced.new_id(v).expect("kept")).collect())
            .collect();
        let inst = Self::new(induced.graph, x, hyperedges, self.k, self.c)?;
        Ok((inst, induced.original))
    }

    /// Moves `roots` from `R` into the modulator, turning every plain edge
    /// between a moved vertex and the old modulator into a size-2 hyperedge.
    pub fn promote(&self, roots: &VertexSet) -> Result<Self> {
        let mut plain = Graph::new(self.n());
        let mut hyperedges = self.hyperedges.clone();
        for (u, v) in self.graph.edges() {
            let crosses = (roots.contains(u) && self.in_x[v]) || (roots.contains(v) && self.in_x[u]);
            if crosses {
                hyperedges.push(VertexSet::from_vec(vec![u, v]));
            } else {
                plain.add_edge(u, v)?;
            }
        }
        if let Some(labels) = self.graph.labels() {
            for (v, l) in labels.iter().enumerate() {
                plain.set_label(v, l.clone());
            }
        }
        Self::new(plain, self.x.union(roots), hyperedges, self.k, self.c)
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.graph.set_label(v, label);
    }

    /// Adds a hyperedge (kept sorted).
    pub fn add_hyperedge(&mut self, h: VertexSet) -> Result<()> {
        if h.is_empty() || !h.iter().all(|v| v < self.n() && self.in_x[v]) {
            return Err(Error::Invariant(format!(
                "hyperedge {h:?} is not a non-empty subset of the modulator"
            )));
        }
        if let Err(pos) = self.hyperedges.binary_search(&h) {
            self.hyperedges.insert(pos, h);
        }
        Ok(())
    }
}

/// One component of `G[R]` with what is needed to evaluate conflicts on it.
#[derive(Clone, Debug)]
pub struct Region {
    /// Instance ids, increasing.
    pub vertices: VertexSet,
    pub local: Graph,
    pub decomposition: TdDecomposition,
    pub alpha: usize,
}

/// Per-instance conflict evaluator.
///
/// `conf_{R'}(X') = alpha(R') - alpha(R' - N_{R'}(X'))` only depends on the
/// trace `N_{R'}(X')`, so values are cached per (component, trace).
pub struct ConfOracle<'a> {
    inst: &'a AnnotatedInstance,
    regions: Vec<Region>,
    region_of: Vec<Option<(usize, usize)>>,
    cache: HashMap<(usize, BitSet), (usize, Vec<usize>)>,
}

impl<'a> ConfOracle<'a> {
    pub fn new(inst: &'a AnnotatedInstance) -> Result<Self> {
        let mut regions = Vec::new();
        let mut region_of = vec![None; inst.n()];
        for (i, comp) in inst.r_components().into_iter().enumerate() {
            let induced = induced_subgraph(inst.graph(), &comp)?;
            let (_, decomposition) = td_exact(&induced.graph)?;
            let (alpha, _) =
                alpha_treedepth_dp(&induced.graph, &decomposition, &BitSet::new(comp.len()));
            for (local, v) in comp.iter().enumerate() {
                region_of[v] = Some((i, local));
            }
            regions.push(Region {
                vertices: comp,
                local: induced.graph,
                decomposition,
                alpha,
            });
        }
        Ok(Self {
            inst,
            regions,
            region_of,
            cache: HashMap::new(),
        })
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn alpha_r(&self) -> usize {
        self.regions.iter().map(|r| r.alpha).sum()
    }

    /// Traces of `N_R(X')`, grouped per region (local ids).
    fn traces(&self, xprime: &[usize]) -> Vec<(usize, BitSet)> {
        let mut out: Vec<(usize, BitSet)> = Vec::new();
        for &x in xprime {
            for &u in self.inst.graph().neighbors(x) {
                if let Some((region, local)) = self.region_of[u] {
                    match out.iter_mut().find(|(r, _)| *r == region) {
                        Some((_, set)) => {
                            set.insert(local);
                        }
                        None => {
                            let cap = self.regions[region].vertices.len();
                            out.push((region, BitSet::from_iter(cap, [local])));
                        }
                    }
                }
            }
        }
        out
    }

    /// Maximum independent set of a region avoiding `forbidden` (local ids).
    fn alpha_avoiding(&mut self, region: usize, forbidden: BitSet) -> (usize, Vec<usize>) {
        let key = (region, forbidden);
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let r = &self.regions[region];
        let (value, set) = alpha_treedepth_dp(&r.local, &r.decomposition, &key.1);
        let lifted: Vec<usize> = set.iter().map(|v| r.vertices.as_slice()[v]).collect();
        self.cache.insert(key, (value, lifted.clone()));
        (value, lifted)
    }

    /// `conf_{R'}(X')` for region `region`.
    pub fn conf_region(&mut self, region: usize, xprime: &[usize]) -> usize {
        match self.traces(xprime).into_iter().find(|(r, _)| *r == region) {
            None => 0,
            Some((_, trace)) => {
                let alpha = self.regions[region].alpha;
                alpha - self.alpha_avoiding(region, trace).0
            }
        }
    }

    /// `conf_{R'}(X')` for every region touched by `X'`.
    pub fn conf_by_region(&mut self, xprime: &[usize]) -> Vec<(usize, usize)> {
        self.traces(xprime)
            .into_iter()
            .map(|(region, trace)| {
                let alpha = self.regions[region].alpha;
                (region, alpha - self.alpha_avoiding(region, trace).0)
            })
            .collect()
    }

    /// `conf_R(X')`, summed over regions.
    pub fn conf_total(&mut self, xprime: &[usize]) -> usize {
        self.conf_by_region(xprime).into_iter().map(|(_, c)| c).sum()
    }

    /// Best solution of `G[R]` avoiding `N(X')`, as instance ids.
    fn best_avoiding(&mut self, xprime: &[usize]) -> (usize, Vec<usize>) {
        let traces = self.traces(xprime);
        let mut total = 0;
        let mut set = Vec::new();
        for region in 0..self.regions.len() {
            let forbidden = traces
                .iter()
                .find(|(r, _)| *r == region)
                .map(|(_, t)| t.clone())
                .unwrap_or_else(|| BitSet::new(self.regions[region].vertices.len()));
            let (value, part) = self.alpha_avoiding(region, forbidden);
            total += value;
            set.extend(part);
        }
        (total, set)
    }
}

pub const DEFAULT_ANNOTATED_BUDGET: u64 = 1 << 24;

/// Maximum solution of an annotated instance.
///
/// Enumerates the hyperedge-free subsets of `X` depth-first and completes
/// each one optimally inside `R` with the conflict oracle.
pub fn alpha_annotated(inst: &AnnotatedInstance) -> Result<(usize, VertexSet)> {
    let mut oracle = ConfOracle::new(inst)?;
    let x: Vec<usize> = inst.x().iter().collect();
    let mut search = AnnotatedSearch {
        inst,
        x: &x,
        alpha_r: oracle.alpha_r(),
        found: false,
        best: 0,
        best_set: Vec::new(),
        chosen: Vec::new(),
        nodes: 0,
    };
    search.run(&mut oracle, 0)?;
    let witness = VertexSet::from_vec(search.best_set);
    debug_assert!(inst.is_solution(&witness));
    Ok((search.best, witness))
}

struct AnnotatedSearch<'s> {
    inst: &'s AnnotatedInstance,
    x: &'s [usize],
    alpha_r: usize,
    found: bool,
    best: usize,
    best_set: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl AnnotatedSearch<'_> {
    fn can_add(&self, v: usize) -> bool {
        self.inst.hyperedges().iter().all(|h| {
            !h.contains(v) || h.iter().any(|u| u != v && !self.chosen.contains(&u))
        })
    }

    fn run(&mut self, oracle: &mut ConfOracle<'_>, idx: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > DEFAULT_ANNOTATED_BUDGET {
            return Err(Error::ResourceLimit {
                what: "annotated independent set search",
                budget: DEFAULT_ANNOTATED_BUDGET,
            });
        }
        let optimistic = self.chosen.len() + (self.x.len() - idx) + self.alpha_r;
        if self.found && optimistic <= self.best {
            return Ok(());
        }
        if idx == self.x.len() {
            let (value, part) = oracle.best_avoiding(&self.chosen);
            let total = self.chosen.len() + value;
            if !self.found || total > self.best {
                self.found = true;
                self.best = total;
                self.best_set = self.chosen.iter().copied().chain(part).collect();
            }
            return Ok(());
        }
        let v = self.x[idx];
        if self.can_add(v) {
            self.chosen.push(v);
            self.run(oracle, idx + 1)?;
            self.chosen.pop();
        }
        self.run(oracle, idx + 1)
    }
}

/// `alpha(R') - alpha(R' - Y')` computed with the branch-and-bound engine.
pub fn conf_vertices(g: &Graph, rprime: &VertexSet, y: &VertexSet) -> Result<usize> {
    rprime.validate(g.n())?;
    if !y.is_subset(rprime) {
        return Err(Error::Precondition("Y' must be a subset of R'".into()));
    }
    let whole = induced_subgraph(g, rprime)?;
    let rest = induced_subgraph(g, &rprime.difference(y))?;
    Ok(alpha_exact(&whole.graph)?.0 - alpha_exact(&rest.graph)?.0)
}

/// `conf_{R'}(X') = alpha(R') - alpha(R' - N_{R'}(X'))`, computed with the
/// treedepth dynamic program on `G[R']`.
pub fn conf_chunk(inst: &AnnotatedInstance, rprime: &VertexSet, xprime: &VertexSet) -> Result<usize> {
    if !xprime.is_subset(inst.x()) {
        return Err(Error::Precondition("X' must be a subset of X".into()));
    }
    if rprime.iter().any(|v| inst.in_x(v)) {
        return Err(Error::Precondition("R' must be a subset of R".into()));
    }
    let induced = induced_subgraph(inst.graph(), rprime)?;
    let (_, d) = td_exact(&induced.graph)?;
    let trace = inst.graph().neighborhood_in(xprime, rprime);
    let forbidden = BitSet::from_iter(
        rprime.len(),
        trace.iter().map(|v| induced.new_id(v).expect("inside R'")),
    );
    let full = alpha_treedepth_dp(&induced.graph, &d, &BitSet::new(rprime.len())).0;
    let avoiding = alpha_treedepth_dp(&induced.graph, &d, &forbidden).0;
    Ok(full - avoiding)
}
