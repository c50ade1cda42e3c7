//! c-treedepth modulators: sets `X` with `td(G - X) <= c`.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::treedepth::{td_exact, TdDecomposition, TreedepthSolver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModulatorMode {
    /// Minimum-size modulator by branch and bound.
    Exact,
    /// Repeatedly moves the root of an optimal decomposition of an
    /// offending component into the modulator.
    Greedy,
}

impl std::str::FromStr for ModulatorMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "greedy" => Ok(Self::Greedy),
            other => Err(Error::Precondition(format!("unknown modulator mode `{other}`"))),
        }
    }
}

/// A modulator together with a decomposition of `G - X` certifying it.
#[derive(Clone, Debug)]
pub struct Modulator {
    pub x: VertexSet,
    pub c: usize,
    pub mode: ModulatorMode,
    /// Vertices of `G - X` in increasing order; the certificate is indexed
    /// by position in this list.
    pub remainder: Vec<usize>,
    pub certificate: TdDecomposition,
}

impl Modulator {
    fn certify(g: &Graph, x: VertexSet, c: usize, mode: ModulatorMode) -> Result<Self> {
        let rest = VertexSet::range(g.n()).difference(&x);
        let induced = induced_subgraph(g, &rest)?;
        let (td, certificate) = td_exact(&induced.graph)?;
        if td > c {
            return Err(Error::Invariant(format!(
                "modulator leaves treedepth {td} > {c}"
            )));
        }
        Ok(Self {
            x,
            c,
            mode,
            remainder: induced.original,
            certificate,
        })
    }
}

pub fn compute_modulator(g: &Graph, c: usize, mode: ModulatorMode) -> Result<Modulator> {
    if c == 0 {
        return Err(Error::Precondition("modulator level c must be at least 1".into()));
    }
    let x = match mode {
        ModulatorMode::Exact => exact(g, c)?,
        ModulatorMode::Greedy => greedy(g, c)?,
    };
    Modulator::certify(g, x, c, mode)
}

fn greedy(g: &Graph, c: usize) -> Result<VertexSet> {
    let mut solver = TreedepthSolver::new(g);
    let mut rest = BitSet::full(g.n());
    let mut x = Vec::new();
    while let Some(comp) = solver.first_violating_component(&rest, c)? {
        let root = solver.optimal_root(&comp)?;
        x.push(root);
        rest.remove(root);
    }
    Ok(VertexSet::from_vec(x))
}

/// Shrinks a connected set with treedepth above `c` to a minimal such
/// connected subgraph, trying removals in increasing id order.
fn minimal_obstruction(solver: &mut TreedepthSolver<'_>, comp: &BitSet, c: usize) -> Result<BitSet> {
    let mut current = comp.clone();
    for v in comp.iter() {
        if !current.contains(v) {
            continue;
        }
        let mut trial = current.clone();
        trial.remove(v);
        if let Some(smaller) = solver.first_violating_component(&trial, c)? {
            current = smaller;
        }
    }
    Ok(current)
}

fn exact(g: &Graph, c: usize) -> Result<VertexSet> {
    let mut solver = TreedepthSolver::new(g);
    let mut failed = HashSet::new();
    let mut budget = 0;
    loop {
        let mut rest = BitSet::full(g.n());
        if let Some(x) = search(&mut solver, &mut rest, c, budget, &mut failed)? {
            return Ok(x);
        }
        budget += 1;
    }
}

fn search(
    solver: &mut TreedepthSolver<'_>,
    rest: &mut BitSet,
    c: usize,
    budget: usize,
    failed: &mut HashSet<(BitSet, usize)>,
) -> Result<Option<VertexSet>> {
    let Some(comp) = solver.first_violating_component(rest, c)? else {
        let x = (0..rest.capacity()).filter(|&v| !rest.contains(v)).collect();
        return Ok(Some(x));
    };
    if budget == 0 || failed.contains(&(rest.clone(), budget)) {
        return Ok(None);
    }
    let obstruction = minimal_obstruction(solver, &comp, c)?;
    for v in obstruction.iter() {
        rest.remove(v);
        let found = search(solver, rest, c, budget - 1, failed)?;
        rest.insert(v);
        if found.is_some() {
            return Ok(found);
        }
    }
    failed.insert((rest.clone(), budget));
    Ok(None)
}
