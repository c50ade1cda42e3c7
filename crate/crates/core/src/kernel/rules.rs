use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::kernel::chunks::{chunk_size_limit, enumerate_chunks};
use crate::solver::annotated::{AnnotatedInstance, ConfOracle};

/// The explicit component bound `|X| * sum_{i=1}^{2^c} C(|X|, i)`,
/// saturating at `u128::MAX`.
pub fn max_components(x: usize, c: usize) -> u128 {
    let top = chunk_size_limit(c).min(x);
    let mut binom: u128 = 1;
    let mut sum: u128 = 0;
    for i in 1..=top {
        // C(x, i) = C(x, i - 1) * (x - i + 1) / i, exact at every step.
        binom = match binom.checked_mul((x - i + 1) as u128) {
            Some(v) => v / i as u128,
            None => return u128::MAX,
        };
        sum = sum.saturating_add(binom);
    }
    sum.saturating_mul(x as u128)
}

/// Removes `del` (and every hyperedge meeting it), compacting ids in order.
pub(crate) fn delete_vertices(
    inst: &AnnotatedInstance,
    del: &VertexSet,
) -> Result<(AnnotatedInstance, Vec<usize>)> {
    let keep = VertexSet::range(inst.n()).difference(del);
    inst.restrict(&keep)
}

/// Smallest `u` in `X` with `conf_R({u}) > |X|`, with its conflict.
pub(crate) fn rule1_target(inst: &AnnotatedInstance, oracle: &mut ConfOracle<'_>) -> Option<(usize, usize)> {
    let threshold = inst.x().len();
    inst.x()
        .iter()
        .map(|u| (u, oracle.conf_total(&[u])))
        .find(|&(_, conf)| conf > threshold)
}

/// One application of Rule 1: deletes the smallest modulator vertex whose
/// conflict exceeds `|X|`. Hyperedges containing it are dropped, since no
/// maximum solution uses it. Remaining ids are compacted in order.
pub fn rule1(inst: &AnnotatedInstance) -> Result<(AnnotatedInstance, bool)> {
    let mut oracle = ConfOracle::new(inst)?;
    match rule1_target(inst, &mut oracle) {
        Some((u, _)) => Ok((delete_vertices(inst, &VertexSet::singleton(u))?.0, true)),
        None => Ok((inst.clone(), false)),
    }
}

/// First chunk (lexicographically) with `conf_R(X') > |X|`.
pub(crate) fn rule2_target(
    inst: &AnnotatedInstance,
    oracle: &mut ConfOracle<'_>,
) -> Option<(VertexSet, usize)> {
    let threshold = inst.x().len();
    enumerate_chunks(inst)
        .map(|chunk| {
            let conf = oracle.conf_total(chunk.as_slice());
            (chunk, conf)
        })
        .find(|&(_, conf)| conf > threshold)
}

/// All hyperedges added by exhausting Rule 2, in application order.
///
/// Adding a hyperedge only removes chunks and leaves every conflict value
/// unchanged, so one lexicographic pass that skips chunks swallowed by the
/// hyperedges added so far reaches the fixpoint.
pub(crate) fn rule2_pass(inst: &AnnotatedInstance, oracle: &mut ConfOracle<'_>) -> Vec<(VertexSet, usize)> {
    let threshold = inst.x().len();
    let mut added: Vec<(VertexSet, usize)> = Vec::new();
    for chunk in enumerate_chunks(inst) {
        if added.iter().any(|(h, _)| h.is_subset(&chunk)) {
            continue;
        }
        let conf = oracle.conf_total(chunk.as_slice());
        if conf > threshold {
            added.push((chunk, conf));
        }
    }
    added
}

/// One application of Rule 2: the first chunk whose conflict exceeds `|X|`
/// becomes a hyperedge.
pub fn rule2(inst: &AnnotatedInstance) -> Result<(AnnotatedInstance, bool)> {
    let mut oracle = ConfOracle::new(inst)?;
    match rule2_target(inst, &mut oracle) {
        Some((chunk, _)) => {
            let mut out = inst.clone();
            out.add_hyperedge(chunk)?;
            Ok((out, true))
        }
        None => Ok((inst.clone(), false)),
    }
}

/// Indices of the regions on which every chunk has zero conflict.
pub(crate) fn rule3_targets(inst: &AnnotatedInstance, oracle: &mut ConfOracle<'_>) -> Vec<usize> {
    let regions = oracle.regions().len();
    let mut touched = vec![false; regions];
    let mut open = regions;
    for chunk in enumerate_chunks(inst) {
        if open == 0 {
            break;
        }
        for (region, conf) in oracle.conf_by_region(chunk.as_slice()) {
            if conf > 0 && !touched[region] {
                touched[region] = true;
                open -= 1;
            }
        }
    }
    (0..regions).filter(|&r| !touched[r]).collect()
}

/// One application of Rule 3: the first component of `G[R]` on which no
/// chunk has a conflict is deleted and `k` drops by its independence number.
pub fn rule3(inst: &AnnotatedInstance) -> Result<(AnnotatedInstance, bool)> {
    let mut oracle = ConfOracle::new(inst)?;
    match rule3_targets(inst, &mut oracle).first() {
        Some(&region) => {
            let r = &oracle.regions()[region];
            let (out, _) = delete_vertices(inst, &r.vertices)?;
            Ok((out.with_k(inst.k() - r.alpha as i64), true))
        }
        None => Ok((inst.clone(), false)),
    }
}

/// Root lifting: the result, the lifted roots and the new hyperedges.
pub(crate) fn lift(
    inst: &AnnotatedInstance,
    oracle: &ConfOracle<'_>,
) -> Result<(AnnotatedInstance, VertexSet, Vec<VertexSet>)> {
    if oracle.regions().is_empty() {
        return Ok((inst.clone(), VertexSet::new(), Vec::new()));
    }
    if inst.c() == 0 {
        return Err(Error::Invariant("R is non-empty at level 0".into()));
    }
    let roots: VertexSet = oracle
        .regions()
        .iter()
        .map(|r| r.vertices.as_slice()[r.decomposition.roots[0]])
        .collect();
    let mut new_hyperedges = Vec::new();
    for r in roots.iter() {
        for &u in inst.graph().neighbors(r) {
            if inst.in_x(u) {
                new_hyperedges.push(VertexSet::from_vec(vec![r, u]));
            }
        }
    }
    new_hyperedges.sort();
    let out = inst.promote(&roots)?.with_c(inst.c() - 1);
    Ok((out, roots, new_hyperedges))
}

/// Moves the root of an optimal decomposition of every component of `G[R]`
/// into the modulator and lowers the level. Fails if a rule still applies.
pub fn lift_roots(inst: &AnnotatedInstance) -> Result<AnnotatedInstance> {
    let mut oracle = ConfOracle::new(inst)?;
    if rule1_target(inst, &mut oracle).is_some()
        || rule2_target(inst, &mut oracle).is_some()
        || !rule3_targets(inst, &mut oracle).is_empty()
    {
        return Err(Error::Precondition(
            "root lifting requires Rules 1-3 to be exhausted".into(),
        ));
    }
    Ok(lift(inst, &oracle)?.0)
}

/// [`lift_roots`] without the exhaustion check.
pub fn lift_roots_unchecked(inst: &AnnotatedInstance) -> Result<AnnotatedInstance> {
    let oracle = ConfOracle::new(inst)?;
    Ok(lift(inst, &oracle)?.0)
}
