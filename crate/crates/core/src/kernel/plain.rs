use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::annotated::AnnotatedInstance;

/// Encodes an instance with `R` empty as a plain Independent Set instance.
///
/// With `n = |X|` and `m` hyperedges: modulator vertex `i` (in increasing
/// id order) becomes the path `y_a - z - y_b` with `y_a = 3i`,
/// `y_b = 3i+1` and `z = 3i+2`; taking both `y` vertices means
/// taking the vertex. Each hyperedge `H` then gets `|H|` independent parts
/// of `n` vertices forming a complete multipartite graph, part `l` being
/// fully joined to the `y` vertices of the `l`-th vertex of `H`. The budget
/// is `n + k + n*m`.
pub fn annotated_to_plain(inst: &AnnotatedInstance) -> Result<(Graph, i64)> {
    if !inst.r().is_empty() {
        return Err(Error::Precondition(
            "plain encoding needs an instance without R vertices".into(),
        ));
    }
    let n = inst.n();
    let m = inst.hyperedges().len();
    let total = 3 * n + n * inst.hyperedge_volume();
    let mut g = Graph::new(total);
    for i in 0..n {
        let v = inst.graph().label(i).filter(|l| !l.is_empty()).map_or_else(|| i.to_string(), str::to_owned);
        g.set_label(3 * i, format!("ya:{v}"));
        g.set_label(3 * i + 1, format!("yb:{v}"));
        g.set_label(3 * i + 2, format!("z:{v}"));
        g.add_edge(3 * i + 2, 3 * i)?;
        g.add_edge(3 * i + 2, 3 * i + 1)?;
    }
    let mut next = 3 * n;
    for (hi, h) in inst.hyperedges().iter().enumerate() {
        let base = next;
        let parts = h.len();
        for (l, v) in h.iter().enumerate() {
            for j in 0..n {
                let w = base + l * n + j;
                g.set_label(w, format!("w:{hi}:{l}:{j}"));
                g.add_edge(w, 3 * v)?;
                g.add_edge(w, 3 * v + 1)?;
                for other in base + (l + 1) * n..base + parts * n {
                    g.add_edge(w, other)?;
                }
            }
        }
        next = base + parts * n;
    }
    debug_assert_eq!(next, total);
    let k = n as i64 + inst.k() + (n * m) as i64;
    Ok((g, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_subgraph, VertexSet};

    #[test]
    fn five_vertex_example() {
        let h = VertexSet::from_vec(vec![0, 2, 3]);
        let inst = AnnotatedInstance::new(Graph::new(5), VertexSet::range(5), vec![h], 2, 0).unwrap();
        let (g, k) = annotated_to_plain(&inst).unwrap();
        assert_eq!(g.n(), 30);
        assert_eq!(k, 2 + 10);
        // 5 * 2 gadget edges, 3 * 25 multipartite edges, 3 * 5 * 2 links.
        assert_eq!(g.m(), 10 + 75 + 30);
        let gadget = induced_subgraph(&g, &VertexSet::range(3)).unwrap();
        assert_eq!(gadget.graph.m(), 2);
    }

    #[test]
    fn no_hyperedges_gives_paths() {
        let inst = AnnotatedInstance::new(Graph::new(3), VertexSet::range(3), vec![], 1, 0).unwrap();
        let (g, k) = annotated_to_plain(&inst).unwrap();
        assert_eq!((g.n(), g.m(), k), (9, 6, 4));
    }

    #[test]
    fn requires_empty_r() {
        let inst = AnnotatedInstance::new(Graph::new(2), VertexSet::singleton(0), vec![], 1, 1).unwrap();
        assert!(annotated_to_plain(&inst).is_err());
    }
}
