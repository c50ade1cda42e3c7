//! JSON reports and certificate files.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::kernel::{KernelEvent, PipelineReport};
use crate::reductions::LabeledInstance;

pub const SCHEMA_VERSION: u32 = 1;

/// Renders a kernelization report. Wall time is included only when given,
/// so that reports of identical runs are byte-identical by default.
pub fn emit_report(report: &PipelineReport, wall_time: Option<Duration>) -> String {
    let trace = &report.trace;
    let count = |f: fn(&KernelEvent) -> bool| trace.events.iter().filter(|e| f(e)).count();
    let k_delta: i64 = trace.events.iter().map(KernelEvent::k_delta).sum();
    let mut value = json!({
        "schema_version": SCHEMA_VERSION,
        "input": {
            "n": report.input_n,
            "m": report.input_m,
            "hyperedges": report.input_hyperedges,
            "k": report.input_k,
            "c": report.c,
        },
        "modulator": {
            "source": report.modulator_source,
            "size": report.modulator_size,
        },
        "rule_counts": {
            "rule1": count(|e| matches!(e, KernelEvent::Rule1 { .. })),
            "rule2": count(|e| matches!(e, KernelEvent::Rule2 { .. })),
            "rule3": count(|e| matches!(e, KernelEvent::Rule3 { .. })),
            "lift": count(|e| matches!(e, KernelEvent::Lift { .. })),
        },
        "levels": trace.levels,
        "component_bound_holds": trace.bound_holds(),
        "k_delta": k_delta,
        "k_replay_consistent": trace.replay_k() == trace.final_k,
        "events": trace.events,
        "kernel": {
            "x": report.kernel_x,
            "hyperedges": report.kernel_hyperedges,
            "hyperedge_volume": report.kernel_hyperedge_volume,
            "k": report.kernel_k,
            "origin": trace.origin,
        },
        "output": {
            "n": report.output_n,
            "m": report.output_m,
            "k": report.output_k,
        },
        "exponents": {
            "annotated_log2": report.annotated_exponent_log2,
            "plain_log2": report.plain_exponent_log2,
        },
    });
    if let Some(wall) = wall_time {
        value["wall_time_ms"] = json!(wall.as_secs_f64() * 1000.0);
    }
    let mut text = serde_json::to_string_pretty(&value).expect("report is valid JSON");
    text.push('\n');
    text
}

/// Certificates of a generated instance, stored next to the instance file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub schema_version: u32,
    pub k: i64,
    pub modulator_level: Option<usize>,
    pub degeneracy_bound: Option<usize>,
    pub certificates: BTreeMap<String, Vec<usize>>,
}

impl CertificateFile {
    pub fn of(inst: &LabeledInstance) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            k: inst.k,
            modulator_level: inst.modulator_level,
            degeneracy_bound: inst.degeneracy_bound,
            certificates: inst.certificates.clone(),
        }
    }

    pub fn attach(self, graph: crate::graph::Graph) -> LabeledInstance {
        LabeledInstance {
            graph,
            k: self.k,
            certificates: self.certificates,
            modulator_level: self.modulator_level,
            degeneracy_bound: self.degeneracy_bound,
        }
    }
}
