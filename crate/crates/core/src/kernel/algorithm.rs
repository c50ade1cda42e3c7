use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::kernel::chunks::enumerate_chunks;
use crate::kernel::rules::{delete_vertices, max_components, lift, rule1_target, rule2_pass, rule3_targets};
use crate::solver::annotated::{AnnotatedInstance, ConfOracle};

/// One rewrite step. Vertex ids refer to the kernelizer's input instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum KernelEvent {
    Rule1 {
        level: usize,
        vertex: usize,
        conf: usize,
        threshold: usize,
    },
    Rule2 {
        level: usize,
        hyperedge: Vec<usize>,
        conf: usize,
        threshold: usize,
    },
    Rule3 {
        level: usize,
        component: Vec<usize>,
        alpha: usize,
        k_delta: i64,
    },
    Lift {
        level: usize,
        roots: Vec<usize>,
        new_hyperedges: Vec<Vec<usize>>,
    },
}

impl KernelEvent {
    pub fn k_delta(&self) -> i64 {
        match self {
            KernelEvent::Rule3 { k_delta, .. } => *k_delta,
            _ => 0,
        }
    }

    pub fn level(&self) -> usize {
        match self {
            KernelEvent::Rule1 { level, .. }
            | KernelEvent::Rule2 { level, .. }
            | KernelEvent::Rule3 { level, .. }
            | KernelEvent::Lift { level, .. } => *level,
        }
    }
}

/// Sizes after Rules 1-3 at one level, before lifting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSnapshot {
    pub level: usize,
    pub x: usize,
    pub hyperedges: usize,
    pub hyperedge_volume: usize,
    pub chunks: usize,
    pub components: usize,
    pub component_bound: u128,
    pub bound_holds: bool,
    pub rule1: usize,
    pub rule2: usize,
    pub rule3: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KernelTrace {
    pub initial_k: i64,
    pub final_k: i64,
    pub events: Vec<KernelEvent>,
    pub levels: Vec<LevelSnapshot>,
    /// `origin[v]` is the input id of output vertex `v`.
    pub origin: Vec<usize>,
}

impl KernelTrace {
    /// `initial_k` plus every recorded k-delta.
    pub fn replay_k(&self) -> i64 {
        self.initial_k + self.events.iter().map(KernelEvent::k_delta).sum::<i64>()
    }

    pub fn bound_holds(&self) -> bool {
        self.levels.iter().all(|l| l.bound_holds)
    }
}

struct Working {
    inst: AnnotatedInstance,
    origin: Vec<usize>,
}

impl Working {
    fn lift_ids(&self, set: &VertexSet) -> Vec<usize> {
        set.iter().map(|v| self.origin[v]).collect()
    }

    fn delete(&mut self, del: &VertexSet) -> Result<()> {
        let (inst, kept) = delete_vertices(&self.inst, del)?;
        self.origin = kept.into_iter().map(|v| self.origin[v]).collect();
        self.inst = inst;
        Ok(())
    }
}

/// Runs the kernelization until `R` is empty.
///
/// Returns an equivalent instance consisting of modulator vertices only,
/// and the trace of every rule application.
pub fn kernelize(inst: &AnnotatedInstance) -> Result<(AnnotatedInstance, KernelTrace)> {
    let mut w = Working {
        inst: inst.clone(),
        origin: (0..inst.n()).collect(),
    };
    let mut trace = KernelTrace {
        initial_k: inst.k(),
        ..KernelTrace::default()
    };
    while !w.inst.r().is_empty() {
        let level = w.inst.c();
        let mut oracle = ConfOracle::new(&w.inst)?;
        if let Some(r) = oracle.regions().iter().find(|r| r.decomposition.height > level) {
            return Err(Error::Invariant(format!(
                "component of R containing vertex {} has treedepth {} > {level}",
                w.origin[r.vertices.as_slice()[0]],
                r.decomposition.height
            )));
        }

        // Rule 1. Conflicts of single vertices do not depend on X, only the
        // threshold shrinks as vertices go.
        let mut rule1 = 0;
        while let Some((u, conf)) = rule1_target(&w.inst, &mut oracle) {
            trace.events.push(KernelEvent::Rule1 {
                level,
                vertex: w.origin[u],
                conf,
                threshold: w.inst.x().len(),
            });
            rule1 += 1;
            w.delete(&VertexSet::singleton(u))?;
            oracle = ConfOracle::new(&w.inst)?;
        }

        // Rule 2.
        let threshold = w.inst.x().len();
        let added = rule2_pass(&w.inst, &mut oracle);
        let rule2 = added.len();
        drop(oracle);
        for (h, conf) in added {
            trace.events.push(KernelEvent::Rule2 {
                level,
                hyperedge: w.lift_ids(&h),
                conf,
                threshold,
            });
            w.inst.add_hyperedge(h)?;
        }

        // Rule 3. Deleting one component changes no other component's
        // conflicts, so all targets go at once.
        let mut oracle = ConfOracle::new(&w.inst)?;
        let targets = rule3_targets(&w.inst, &mut oracle);
        let rule3 = targets.len();
        let mut doomed = VertexSet::new();
        let mut k = w.inst.k();
        for &t in &targets {
            let region = &oracle.regions()[t];
            trace.events.push(KernelEvent::Rule3 {
                level,
                component: w.lift_ids(&region.vertices),
                alpha: region.alpha,
                k_delta: -(region.alpha as i64),
            });
            k -= region.alpha as i64;
            doomed = doomed.union(&region.vertices);
        }
        drop(oracle);
        if !doomed.is_empty() {
            w.delete(&doomed)?;
            w.inst = w.inst.clone().with_k(k);
        }

        let oracle = ConfOracle::new(&w.inst)?;
        let x = w.inst.x().len();
        let components = oracle.regions().len();
        let component_bound = max_components(x, level);
        trace.levels.push(LevelSnapshot {
            level,
            x,
            hyperedges: w.inst.hyperedges().len(),
            hyperedge_volume: w.inst.hyperedge_volume(),
            chunks: enumerate_chunks(&w.inst).count(),
            components,
            component_bound,
            bound_holds: components as u128 <= component_bound,
            rule1,
            rule2,
            rule3,
        });
        if components == 0 {
            break;
        }

        let (next, roots, new_hyperedges) = lift(&w.inst, &oracle)?;
        trace.events.push(KernelEvent::Lift {
            level,
            roots: w.lift_ids(&roots),
            new_hyperedges: new_hyperedges.iter().map(|h| w.lift_ids(h)).collect(),
        });
        drop(oracle);
        w.inst = next;
    }
    trace.final_k = w.inst.k();
    trace.origin = w.origin;
    debug_assert_eq!(trace.replay_k(), trace.final_k);
    Ok((w.inst, trace))
}
