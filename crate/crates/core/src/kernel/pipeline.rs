use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kernel::algorithm::{kernelize, KernelTrace};
use crate::kernel::plain::annotated_to_plain;
use crate::modulator::{compute_modulator, ModulatorMode};
use crate::solver::annotated::AnnotatedInstance;
use crate::treedepth::is_c_modulator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulatorSource {
    Given,
    Exact,
    Greedy,
}

/// Base-2 logarithms of the exponents in the kernel size bounds: the
/// annotated kernel has `O(x^(2^a))` modulator vertices and the plain
/// kernel `O(x^(2^b))` vertices, with `(a, b)` returned here.
pub fn kernel_exponents(c: usize) -> (usize, usize) {
    let a = (c + 1) * (c + 2) / 2;
    (a, a + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub input_n: usize,
    pub input_m: usize,
    pub input_hyperedges: usize,
    pub input_k: i64,
    pub c: usize,
    pub modulator_source: ModulatorSource,
    pub modulator_size: usize,
    pub trace: KernelTrace,
    pub kernel_x: usize,
    pub kernel_hyperedges: usize,
    pub kernel_hyperedge_volume: usize,
    pub kernel_k: i64,
    pub output_n: usize,
    pub output_m: usize,
    pub output_k: i64,
    pub annotated_exponent_log2: usize,
    pub plain_exponent_log2: usize,
}

#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub graph: Graph,
    pub k: i64,
    pub modulator: VertexSet,
    pub annotated: AnnotatedInstance,
    pub report: PipelineReport,
}

/// Kernelizes `(g, k)` for Independent Set: `alpha(g) >= k` iff
/// `alpha(output.graph) >= output.k`.
///
/// Uses `x` as the modulator when given (it must leave treedepth at most
/// `c`), otherwise computes one with `mode`.
pub fn full_pipeline(
    g: &Graph,
    k: i64,
    c: usize,
    x: Option<&VertexSet>,
    mode: ModulatorMode,
) -> Result<PipelineOutput> {
    if c == 0 {
        return Err(Error::Precondition("the level c must be at least 1".into()));
    }
    let (modulator, source) = match x {
        Some(x) => {
            if !is_c_modulator(g, x, c)? {
                return Err(Error::InvalidModulator(format!(
                    "removing the given {} vertices leaves treedepth above {c}",
                    x.len()
                )));
            }
            (x.clone(), ModulatorSource::Given)
        }
        None => {
            let source = match mode {
                ModulatorMode::Exact => ModulatorSource::Exact,
                ModulatorMode::Greedy => ModulatorSource::Greedy,
            };
            (compute_modulator(g, c, mode)?.x, source)
        }
    };
    let inst = AnnotatedInstance::from_graph(g, &modulator, k, c)?;
    let mut out = annotated_pipeline(&inst)?;
    out.report.input_m = g.m();
    out.report.input_hyperedges = 0;
    out.report.modulator_source = source;
    if let Some(labels) = g.labels() {
        for (v, &orig) in out.report.trace.origin.iter().enumerate() {
            out.annotated.set_label(v, labels[orig].clone());
        }
        out.graph = annotated_to_plain(&out.annotated)?.0;
    }
    Ok(out)
}

/// Kernelizes an annotated instance and encodes the result as a plain
/// Independent Set instance.
pub fn annotated_pipeline(inst: &AnnotatedInstance) -> Result<PipelineOutput> {
    let (mut kernel, trace) = kernelize(inst)?;
    for (v, &orig) in trace.origin.iter().enumerate() {
        let name = inst.graph().label(orig).filter(|l| !l.is_empty()).map_or_else(|| orig.to_string(), str::to_owned);
        kernel.set_label(v, name);
    }
    let (plain, kprime) = annotated_to_plain(&kernel)?;
    let (a, b) = kernel_exponents(inst.c());
    let report = PipelineReport {
        input_n: inst.n(),
        input_m: inst.graph().m(),
        input_hyperedges: inst.hyperedges().len(),
        input_k: inst.k(),
        c: inst.c(),
        modulator_source: ModulatorSource::Given,
        modulator_size: inst.x().len(),
        kernel_x: kernel.x().len(),
        kernel_hyperedges: kernel.hyperedges().len(),
        kernel_hyperedge_volume: kernel.hyperedge_volume(),
        kernel_k: kernel.k(),
        output_n: plain.n(),
        output_m: plain.m(),
        output_k: kprime,
        annotated_exponent_log2: a,
        plain_exponent_log2: b,
        trace,
    };
    Ok(PipelineOutput {
        graph: plain,
        k: kprime,
        modulator: inst.x().clone(),
        annotated: kernel,
        report,
    })
}
