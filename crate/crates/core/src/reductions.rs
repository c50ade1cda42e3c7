//! Instance generators for the hardness side: subdivisions for Dominating
//! Set, the 3-SAT cross-composition, the conflict lower-bound family and a
//! few simple compositions.

use std::collections::BTreeMap;

use crate::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::graph::{degeneracy, disjoint_union, elimination_width, Graph, VertexSet};
use crate::solver::mis::alpha_exact;
use crate::treedepth::is_c_modulator;

/// A generated instance with named vertex lists certifying its structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledInstance {
    pub graph: Graph,
    pub k: i64,
    pub certificates: BTreeMap<String, Vec<usize>>,
    /// Treedepth bound promised for `graph - certificates["modulator"]`.
    pub modulator_level: Option<usize>,
    /// Width promised for `certificates["elimination_order"]`.
    pub degeneracy_bound: Option<usize>,
}

impl LabeledInstance {
    fn new(graph: Graph, k: i64) -> Self {
        Self {
            graph,
            k,
            certificates: BTreeMap::new(),
            modulator_level: None,
            degeneracy_bound: None,
        }
    }

    fn with(mut self, name: &str, vertices: Vec<usize>) -> Self {
        self.certificates.insert(name.to_owned(), vertices);
        self
    }

    pub fn certificate(&self, name: &str) -> Option<&[usize]> {
        self.certificates.get(name).map(Vec::as_slice)
    }

    pub fn modulator(&self) -> Option<VertexSet> {
        self.certificate("modulator").map(|m| VertexSet::from_vec(m.to_vec()))
    }

    /// Checks every certificate against the graph.
    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        for (name, list) in &self.certificates {
            if let Some(&v) = list.iter().find(|&&v| v >= n) {
                return Err(Error::Invariant(format!(
                    "certificate `{name}` names vertex {v} outside 0..{n}"
                )));
            }
        }
        if let (Some(x), Some(level)) = (self.modulator(), self.modulator_level) {
            if !is_c_modulator(&self.graph, &x, level)? {
                return Err(Error::InvalidModulator(format!(
                    "certified modulator leaves treedepth above {level}"
                )));
            }
        }
        if let (Some(order), Some(bound)) = (self.certificate("elimination_order"), self.degeneracy_bound) {
            let width = elimination_width(&self.graph, order)?;
            if width > bound {
                return Err(Error::Invariant(format!(
                    "elimination order has width {width} > {bound}"
                )));
            }
        }
        Ok(())
    }
}

/// Replaces every edge `{u, v}` (`u < v`) by a path through `t` new
/// vertices. Edge number `e` in canonical order owns ids
/// `n + e*t .. n + (e+1)*t`, listed from `u` towards `v`.
pub fn subdivide(g: &Graph, t: usize) -> Graph {
    if t == 0 {
        return g.clone();
    }
    let n = g.n();
    let mut out = Graph::new(n + t * g.m());
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.set_label(v, l.clone());
        }
    }
    for (e, (u, v)) in g.edges().enumerate() {
        let base = n + e * t;
        let mut prev = u;
        for i in 0..t {
            out.add_edge(prev, base + i).expect("fresh vertex");
            prev = base + i;
        }
        out.add_edge(prev, v).expect("fresh vertex");
    }
    out
}

/// `(g, k)` becomes `(g subdivided 3c times, k + m*c)`; domination numbers
/// shift by exactly `m*c`.
pub fn ds_subdivision_instance(g: &Graph, k: i64, c: usize) -> LabeledInstance {
    let kprime = k + (g.m() * c) as i64;
    LabeledInstance::new(subdivide(g, 3 * c), kprime).with("original", (0..g.n()).collect())
}

/// Dominating Set instance on a 2-degenerate graph from `(g, k)`.
///
/// The output is the 3-subdivision with budget `k + m`. Any vertex cover
/// of `g` is a 3-treedepth modulator of it; `cover` is used if given and
/// a minimum one is computed otherwise.
pub fn reduce_vc_ds_deg2(g: &Graph, k: i64, cover: Option<&VertexSet>) -> Result<LabeledInstance> {
    let cover = match cover {
        Some(c) => {
            c.validate(g.n())?;
            if !g.is_vertex_cover(c) {
                return Err(Error::Precondition("supplied set is not a vertex cover".into()));
            }
            c.clone()
        }
        None => VertexSet::range(g.n()).difference(&alpha_exact(g)?.1),
    };
    let h = subdivide(g, 3);
    let (_, order) = degeneracy(&h);
    let mut out = LabeledInstance::new(h, k + g.m() as i64)
        .with("modulator", cover.into_vec())
        .with("elimination_order", order);
    out.modulator_level = Some(3);
    out.degeneracy_bound = Some(2);
    Ok(out)
}

/// OR-composition of 3-SAT instances sharing `n` and `m` into one
/// Dominating Set instance with budget `n + t`.
///
/// Ids: `x_l = 2l`, `not x_l = 2l + 1`, triangle apex `a_l = 2n + l`; then
/// per formula `i` a block of `m + 2` ids starting at `3n + i(m+2)` holding
/// the clause vertices, `r_i` and `y_i`; the global apex comes last.
pub fn cross_compose_3sat(formulas: &[CnfFormula]) -> Result<LabeledInstance> {
    let first = formulas
        .first()
        .ok_or_else(|| Error::Precondition("need at least one formula".into()))?;
    let (n, m, t) = (first.n_vars(), first.m(), formulas.len());
    if let Some(f) = formulas.iter().find(|f| f.n_vars() != n || f.m() != m) {
        return Err(Error::Precondition(format!(
            "formulas must share n = {n} and m = {m}, found n = {} and m = {}",
            f.n_vars(),
            f.m()
        )));
    }
    let apex = 3 * n + t * (m + 2);
    let mut g = Graph::new(apex + 1);
    let literal = |lit: i32| {
        let l = lit.unsigned_abs() as usize - 1;
        if lit > 0 {
            2 * l
        } else {
            2 * l + 1
        }
    };
    for l in 0..n {
        let (pos, neg, a) = (2 * l, 2 * l + 1, 2 * n + l);
        g.add_edge(pos, neg)?;
        g.add_edge(a, pos)?;
        g.add_edge(a, neg)?;
        g.set_label(pos, format!("x{}", l + 1));
        g.set_label(neg, format!("-x{}", l + 1));
        g.set_label(a, format!("a{}", l + 1));
    }
    let (mut clauses, mut rs, mut ys) = (Vec::new(), Vec::new(), Vec::new());
    for (i, f) in formulas.iter().enumerate() {
        let base = 3 * n + i * (m + 2);
        let (r, y) = (base + m, base + m + 1);
        for (j, clause) in f.clauses().iter().enumerate() {
            let cv = base + j;
            for &lit in clause {
                g.add_edge(cv, literal(lit))?;
            }
            g.add_edge(r, cv)?;
            g.set_label(cv, format!("c{}_{}", i + 1, j + 1));
            clauses.push(cv);
        }
        g.add_edge(r, y)?;
        g.add_edge(y, apex)?;
        g.set_label(r, format!("r{}", i + 1));
        g.set_label(y, format!("y{}", i + 1));
        rs.push(r);
        ys.push(y);
    }
    g.set_label(apex, "alpha");
    let literals: Vec<usize> = (0..2 * n).collect();
    let apexes: Vec<usize> = (2 * n..3 * n).collect();
    let modulator: Vec<usize> = literals.iter().chain(&apexes).copied().chain([apex]).collect();
    let order: Vec<usize> = clauses
        .iter()
        .chain(&rs)
        .chain(&ys)
        .copied()
        .chain([apex])
        .chain(literals.iter().copied())
        .chain(apexes.iter().copied())
        .collect();
    let mut out = LabeledInstance::new(g, (n + t) as i64)
        .with("modulator", modulator)
        .with("elimination_order", order)
        .with("literals", literals)
        .with("triangle_apexes", apexes)
        .with("clauses", clauses)
        .with("r", rs)
        .with("y", ys)
        .with("alpha", vec![apex]);
    out.modulator_level = Some(2);
    out.degeneracy_bound = Some(4);
    Ok(out)
}

/// The graph on which forbidding all of `Y` costs one unit of independence
/// number but forbidding any proper subset costs nothing.
///
/// For `i` in `1..=2t`: `a_i = 3(i-1)`, `b_i = 3(i-1) + 1`,
/// `c_i = 3(i-1) + 2` form a triangle; `b_{2i-1} b_{2i}` and
/// `a_{2i} a_{2i+1}` are edges, and `v1 = 6t`, `v2 = 6t + 1` hang off `a_1`
/// and `a_{2t}`. Returns the graph and `Y = {c_i}`.
pub fn lower_bound_family(t: usize) -> Result<(Graph, VertexSet)> {
    if t == 0 {
        return Err(Error::Precondition("the family starts at t = 1".into()));
    }
    let (a, b, c) = (|i: usize| 3 * (i - 1), |i: usize| 3 * (i - 1) + 1, |i: usize| 3 * (i - 1) + 2);
    let (v1, v2) = (6 * t, 6 * t + 1);
    let mut g = Graph::new(6 * t + 2);
    for i in 1..=2 * t {
        g.add_edge(a(i), b(i))?;
        g.add_edge(b(i), c(i))?;
        g.add_edge(a(i), c(i))?;
        g.set_label(a(i), format!("a{i}"));
        g.set_label(b(i), format!("b{i}"));
        g.set_label(c(i), format!("c{i}"));
    }
    for i in 1..=t {
        g.add_edge(b(2 * i - 1), b(2 * i))?;
    }
    for i in 1..t {
        g.add_edge(a(2 * i), a(2 * i + 1))?;
    }
    g.add_edge(v1, a(1))?;
    g.add_edge(a(2 * t), v2)?;
    g.set_label(v1, "v1");
    g.set_label(v2, "v2");
    Ok((g, (1..=2 * t).map(c).collect()))
}

/// Vertex Cover to Dominating Set: one new vertex per edge, adjacent to
/// both endpoints, same budget. Isolated vertices would have to dominate
/// themselves and are rejected.
pub fn edge_gadget_vc_to_ds(g: &Graph, k: i64) -> Result<LabeledInstance> {
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::Precondition(format!(
            "vertex {v} is isolated; the edge gadget needs every vertex on an edge"
        )));
    }
    let n = g.n();
    let mut out = g.clone();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for &(u, v) in &edges {
        let x = out.add_vertex();
        out.add_edge(x, u)?;
        out.add_edge(x, v)?;
    }
    Ok(LabeledInstance::new(out, k).with("edge_vertices", (n..n + edges.len()).collect()))
}

/// Disjoint union with summed budgets.
pub fn compose_disjoint_union(instances: &[(Graph, i64)]) -> (Graph, i64) {
    let graphs: Vec<Graph> = instances.iter().map(|(g, _)| g.clone()).collect();
    let (g, _) = disjoint_union(&graphs);
    (g, instances.iter().map(|(_, k)| k).sum())
}

/// Dominating Set instance whose modulator leaves treedepth logarithmic in
/// its size, from a red-blue dominating set instance `(U, W, E, k)`.
///
/// `edges` holds pairs `(i, j)` with `i < u` and `j < w`. Ids: `U` first,
/// then `W`, then the `3u` subdivision vertices of every edge, then a
/// square grid on `(3u+1)^4` vertices in row-major order, and the apex
/// (adjacent to the whole grid) last. The budget becomes `k + u*m + 1`.
pub fn gen_logtd_instance(u: usize, w: usize, edges: &[(usize, usize)], k: i64) -> Result<LabeledInstance> {
    if u == 0 {
        return Err(Error::Precondition("need at least one red vertex".into()));
    }
    let mut bip = Graph::new(u + w);
    for &(i, j) in edges {
        if i >= u || j >= w {
            return Err(Error::InvalidVertex {
                vertex: if i >= u { i } else { u + j },
                n: u + w,
            });
        }
        bip.add_edge(i, u + j)?;
    }
    let mut g = subdivide(&bip, 3 * u);
    let side = (3 * u + 1) * (3 * u + 1);
    let grid_start = g.n();
    for _ in 0..side * side {
        g.add_vertex();
    }
    for r in 0..side {
        for c in 0..side {
            let v = grid_start + r * side + c;
            if c + 1 < side {
                g.add_edge(v, v + 1)?;
            }
            if r + 1 < side {
                g.add_edge(v, v + side)?;
            }
        }
    }
    let apex = g.add_vertex();
    for v in grid_start..apex {
        g.add_edge(apex, v)?;
    }
    let m = bip.m();
    let grid: Vec<usize> = (grid_start..apex).collect();
    let modulator: Vec<usize> = (0..u).chain(grid.iter().copied()).chain([apex]).collect();
    // Largest L with 2^L <= (3u+1)^2, i.e. floor(2 log2(3u+1)).
    let level = (usize::BITS - 1 - side.leading_zeros()) as usize;
    let mut out = LabeledInstance::new(g, k + (u * m) as i64 + 1)
        .with("modulator", modulator)
        .with("grid", grid)
        .with("apex", vec![apex]);
    out.modulator_level = Some(level);
    Ok(out)
}
