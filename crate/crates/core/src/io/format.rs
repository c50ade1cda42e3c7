//! The instance format.
//!
//! ```text
//! c comment
//! p graph|atdis <n> <c> <k>
//! v <id> X|R          annotated files only; unlisted vertices are in R
//! e <u> <v>
//! h <v1> ... <vj>     annotated files only
//! x <v1> ...          graph files only: a c-treedepth modulator
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::annotated::AnnotatedInstance;

/// A plain instance: graph, level, budget and an optional modulator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInstance {
    pub graph: Graph,
    pub c: usize,
    pub k: i64,
    pub modulator: Option<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(GraphInstance),
    Annotated(AnnotatedInstance),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub instance: Instance,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Graph,
    Atdis,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v: usize = number(line, tok, "a vertex id")?;
    if v >= n {
        return Err(syntax(line, format!("vertex {v} out of range 0..{n}")));
    }
    Ok(v)
}

/// Largest vertex count a header may declare.
pub const MAX_VERTICES: usize = 1 << 22;

/// Parses an instance file. Every syntax error names its 1-based line.
pub fn parse_instance(text: &str) -> Result<Parsed> {
    let mut header: Option<(Kind, usize, usize, i64)> = None;
    let mut in_x: Vec<bool> = Vec::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut hyperedges: Vec<VertexSet> = Vec::new();
    let mut modulator: Option<Vec<usize>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        let rest: Vec<&str> = toks.collect();
        if tag == "c" {
            continue;
        }
        if tag == "p" {
            if header.is_some() {
                return Err(syntax(line, "duplicate problem line"));
            }
            let [kind, n, c, k] = rest[..] else {
                return Err(syntax(line, "expected `p <graph|atdis> <n> <c> <k>`"));
            };
            let kind = match kind {
                "graph" => Kind::Graph,
                "atdis" => Kind::Atdis,
                other => return Err(syntax(line, format!("unknown instance kind `{other}`"))),
            };
            let n = number(line, n, "a vertex count")?;
            if n > MAX_VERTICES {
                return Err(syntax(line, format!("vertex count {n} exceeds {MAX_VERTICES}")));
            }
            header = Some((kind, n, number(line, c, "a level")?, number(line, k, "a budget")?));
            in_x = vec![false; n];
            continue;
        }
        let Some((kind, n, _, _)) = header else {
            return Err(syntax(line, "line before the problem line"));
        };
        match tag {
            "v" => {
                if kind != Kind::Atdis {
                    return Err(syntax(line, "vertex role lines need an atdis file"));
                }
                let [id, role] = rest[..] else {
                    return Err(syntax(line, "expected `v <id> <X|R>`"));
                };
                let id = vertex(line, id, n)?;
                in_x[id] = match role {
                    "X" => true,
                    "R" => false,
                    other => return Err(syntax(line, format!("unknown role `{other}`"))),
                };
            }
            "e" => {
                let [u, v] = rest[..] else {
                    return Err(syntax(line, "expected `e <u> <v>`"));
                };
                let (u, v) = (vertex(line, u, n)?, vertex(line, v, n)?);
                if u == v {
                    return Err(syntax(line, format!("self-loop at vertex {u}")));
                }
                edges.push((line, u, v));
            }
            "h" => {
                if kind != Kind::Atdis {
                    return Err(syntax(line, "hyperedge lines need an atdis file"));
                }
                if rest.is_empty() {
                    return Err(syntax(line, "empty hyperedge"));
                }
                let h = rest
                    .iter()
                    .map(|t| vertex(line, t, n))
                    .collect::<Result<Vec<_>>>()?;
                hyperedges.push(VertexSet::from_vec(h));
            }
            "x" => {
                if kind != Kind::Graph {
                    return Err(syntax(line, "modulator lines need a graph file; use `v <id> X`"));
                }
                let list = rest
                    .iter()
                    .map(|t| vertex(line, t, n))
                    .collect::<Result<Vec<_>>>()?;
                modulator.get_or_insert_with(Vec::new).extend(list);
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let Some((kind, n, c, k)) = header else {
        return Err(syntax(text.lines().count().max(1), "missing problem line"));
    };
    let mut warnings = Vec::new();
    match kind {
        Kind::Graph => {
            let mut graph = Graph::new(n);
            for (_, u, v) in edges {
                graph.add_edge(u, v)?;
            }
            let instance = Instance::Graph(GraphInstance {
                graph,
                c,
                k,
                modulator: modulator.map(VertexSet::from_vec),
            });
            Ok(Parsed { instance, warnings })
        }
        Kind::Atdis => {
            let mut graph = Graph::new(n);
            for (line, u, v) in edges {
                if in_x[u] && in_x[v] {
                    warnings.push(format!(
                        "line {line}: edge {{{u},{v}}} inside X becomes a hyperedge"
                    ));
                    hyperedges.push(VertexSet::from_vec(vec![u, v]));
                } else {
                    graph.add_edge(u, v)?;
                }
            }
            let x: VertexSet = (0..n).filter(|&v| in_x[v]).collect();
            let inst = AnnotatedInstance::new(graph, x, hyperedges, k, c)?;
            inst.validate()?;
            Ok(Parsed {
                instance: Instance::Annotated(inst),
                warnings,
            })
        }
    }
}

fn join(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical text: header, then modulator or roles, edges and hyperedges
/// in sorted order.
pub fn serialize_instance(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Graph(gi) => {
            writeln!(out, "p graph {} {} {}", gi.graph.n(), gi.c, gi.k).unwrap();
            match &gi.modulator {
                Some(x) if x.is_empty() => out.push_str("x\n"),
                Some(x) => writeln!(out, "x {}", join(x.iter())).unwrap(),
                None => {}
            }
            for (u, v) in gi.graph.edges() {
                writeln!(out, "e {u} {v}").unwrap();
            }
        }
        Instance::Annotated(inst) => {
            writeln!(out, "p atdis {} {} {}", inst.n(), inst.c(), inst.k()).unwrap();
            for v in inst.x().iter() {
                writeln!(out, "v {v} X").unwrap();
            }
            for (u, v) in inst.graph().edges() {
                writeln!(out, "e {u} {v}").unwrap();
            }
            for h in inst.hyperedges() {
                writeln!(out, "h {}", join(h.iter())).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = parse_instance("p atdis 2 1 1\nv 0 X\nv 1 R\ne 0 1").unwrap();
        let Instance::Annotated(inst) = p.instance else { panic!() };
        assert_eq!(inst.x(), &VertexSet::singleton(0));
        assert_eq!(inst.graph().m(), 1);
        let p = parse_instance("p graph 3 0 1\ne 0 1\ne 1 2\ne 0 2").unwrap();
        let Instance::Graph(gi) = p.instance else { panic!() };
        assert_eq!(gi.graph, Graph::complete(3));
        let err = parse_instance("p graph 3 0 1\ne 0 1\ne 1 x\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }), "{err}");
        let err = parse_instance("c big\n\np graph 99999999999 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn empty_graph_is_header_only() {
        let inst = Instance::Graph(GraphInstance {
            graph: Graph::new(0),
            c: 0,
            k: 0,
            modulator: None,
        });
        assert_eq!(serialize_instance(&inst), "p graph 0 0 0\n");
    }

    #[test]
    fn x_edges_become_hyperedges() {
        let p = parse_instance("p atdis 3 1 1\nv 0 X\nv 1 X\ne 0 1\ne 1 2\n").unwrap();
        assert_eq!(p.warnings.len(), 1);
        let Instance::Annotated(inst) = &p.instance else { panic!() };
        assert_eq!(inst.hyperedges(), &[VertexSet::range(2)]);
        assert_eq!(
            serialize_instance(&p.instance),
            "p atdis 3 1 1\nv 0 X\nv 1 X\ne 1 2\nh 0 1\n"
        );
    }

    #[test]
    fn rejections() {
        for (text, line) in [
            ("e 0 1\n", 1),
            ("p graph 2 0 0\np graph 2 0 0\n", 2),
            ("p graph 2 0 0\ne 0 0\n", 2),
            ("p graph 2 0 0\ne 0 2\n", 2),
            ("p graph 2 0 0\nh 0 1\n", 2),
            ("p atdis 2 0 0\nx 0\n", 2),
            ("p atdis 2 0 0\nv 0 Y\n", 2),
            ("p nope 2 0 0\n", 1),
            ("c only a comment\n", 1),
            ("p graph 2 0\n", 1),
        ] {
            match parse_instance(text) {
                Err(Error::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        // td(G[R]) = 2 > 1.
        assert!(matches!(
            parse_instance("p atdis 2 1 0\ne 0 1\n"),
            Err(Error::Invariant(_))
        ));
    }

    #[test]
    fn empty_modulator_round_trips() {
        let text = "p graph 2 1 1\nx\ne 0 1\n";
        let p = parse_instance(text).unwrap();
        assert_eq!(serialize_instance(&p.instance), text);
    }
}
