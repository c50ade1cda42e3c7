use crate::graph::VertexSet;
use crate::solver::annotated::AnnotatedInstance;

/// `2^c`, saturating.
pub fn chunk_size_limit(c: usize) -> usize {
    u32::try_from(c)
        .ok()
        .and_then(|c| 1usize.checked_shl(c))
        .unwrap_or(usize::MAX)
}

/// Subsets of `X` with `1..=2^c` elements that contain no hyperedge, in
/// lexicographic order of their sorted element sequences.
pub fn enumerate_chunks(inst: &AnnotatedInstance) -> Chunks<'_> {
    Chunks {
        x: inst.x().as_slice(),
        hyperedges: inst.hyperedges(),
        limit: chunk_size_limit(inst.c()),
        idx: Vec::new(),
        started: false,
        descend: false,
    }
}

/// Depth-first chunk stream. A set containing a hyperedge is skipped along
/// with all its extensions.
pub struct Chunks<'a> {
    x: &'a [usize],
    hyperedges: &'a [VertexSet],
    limit: usize,
    idx: Vec<usize>,
    started: bool,
    descend: bool,
}

impl Chunks<'_> {
    fn step(&mut self) -> bool {
        let n = self.x.len();
        if !self.started {
            self.started = true;
            if n == 0 || self.limit == 0 {
                return false;
            }
            self.idx.push(0);
            return true;
        }
        let Some(&last) = self.idx.last() else {
            return false;
        };
        if self.descend && self.idx.len() < self.limit && last + 1 < n {
            self.idx.push(last + 1);
            return true;
        }
        while let Some(top) = self.idx.pop() {
            if top + 1 < n {
                self.idx.push(top + 1);
                return true;
            }
        }
        false
    }

    fn current(&self) -> VertexSet {
        VertexSet::from_vec(self.idx.iter().map(|&i| self.x[i]).collect())
    }
}

impl Iterator for Chunks<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if !self.step() {
                return None;
            }
            let set = self.current();
            self.descend = !self.hyperedges.iter().any(|h| h.is_subset(&set));
            if self.descend {
                return Some(set);
            }
        }
    }
}
