use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use super::{Dag, GraphError, ReachabilityIndex, Vertex};

/// A source-to-sink path, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StPath(Vec<Vertex>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathDefect {
    #[error("path is empty")]
    Empty,
    #[error("path starts at {0}, not at the source")]
    WrongStart(Vertex),
    #[error("path ends at {0}, not at the sink")]
    WrongEnd(Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("({0}, {1}) is not an arc")]
    MissingArc(Vertex, Vertex),
    #[error("vertex {0} repeats")]
    Repeated(Vertex),
}

impl StPath {
    /// Wraps a vertex sequence without checking it; see [`StPath::check`].
    pub fn from_vertices(vertices: Vec<Vertex>) -> Self {
        StPath(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Checks the path against `dag`: starts at the source, ends at the sink,
    /// follows arcs, and visits no vertex twice.
    pub fn check(&self, dag: &Dag) -> Result<(), PathDefect> {
        let (&first, &last) = match (self.0.first(), self.0.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(PathDefect::Empty),
        };
        let n = dag.vertex_count();
        if let Some(&v) = self.0.iter().find(|&&v| v >= n) {
            return Err(PathDefect::UnknownVertex(v));
        }
        if first != dag.source() {
            return Err(PathDefect::WrongStart(first));
        }
        if last != dag.sink() {
            return Err(PathDefect::WrongEnd(last));
        }
        let mut seen = vec![false; n];
        for &v in &self.0 {
            if core::mem::replace(&mut seen[v], true) {
                return Err(PathDefect::Repeated(v));
            }
        }
        if let Some(w) = self.0.windows(2).find(|w| !dag.has_arc(w[0], w[1])) {
            return Err(PathDefect::MissingArc(w[0], w[1]));
        }
        Ok(())
    }
}

/// Appends to `out` a path from `from` to `to`, excluding `from` itself.
/// At each step the successor with the smallest topological rank that still
/// reaches `to` is taken.
pub fn connect(
    dag: &Dag,
    reach: &ReachabilityIndex,
    from: Vertex,
    to: Vertex,
    out: &mut Vec<Vertex>,
) -> Result<(), GraphError> {
    if !reach.reaches(from, to) {
        return Err(GraphError::NotReachable { from, to });
    }
    let mut cur = from;
    while cur != to {
        cur = dag
            .successors(cur)
            .iter()
            .copied()
            .filter(|&v| reach.reaches(v, to))
            .min_by_key(|&v| reach.topo_position(v))
            .expect("reachable target has a reaching successor");
        out.push(cur);
    }
    Ok(())
}

/// Builds the source-to-sink path through `anchors` in the given order,
/// joining consecutive anchors with [`connect`]. Anchors equal to the
/// current endpoint (including the source and sink) are absorbed.
pub fn stitch_chain(
    dag: &Dag,
    reach: &ReachabilityIndex,
    anchors: &[Vertex],
) -> Result<StPath, GraphError> {
    let mut out = vec![dag.source()];
    let mut cur = dag.source();
    for &a in anchors.iter().chain(core::iter::once(&dag.sink())) {
        connect(dag, reach, cur, a, &mut out)?;
        cur = a;
    }
    Ok(StPath(out))
}

/// Depth-first iterator over all source-to-sink paths, in lexicographic
/// order of successor ids.
pub struct StPaths<'a> {
    dag: &'a Dag,
    alive: Vec<bool>,
    path: Vec<Vertex>,
    // next successor slot for each vertex on `path`
    slots: Vec<usize>,
    started: bool,
}

impl<'a> StPaths<'a> {
    pub fn new(dag: &'a Dag) -> Self {
        StPaths { dag, alive: dag.reaches_sink(), path: Vec::new(), slots: Vec::new(), started: false }
    }
}

impl Iterator for StPaths<'_> {
    type Item = StPath;

    fn next(&mut self) -> Option<StPath> {
        if !self.started {
            self.started = true;
            let s = self.dag.source();
            if !self.alive[s] {
                return None;
            }
            self.path.push(s);
            self.slots.push(0);
            if s == self.dag.sink() {
                return Some(StPath(self.path.clone()));
            }
        }
        let sink = self.dag.sink();
        while let Some(&u) = self.path.last() {
            let slot = self.slots.last_mut().expect("slots track path");
            let succ = self.dag.successors(u);
            match succ[*slot..].iter().position(|&v| self.alive[v]) {
                Some(offset) => {
                    let v = succ[*slot + offset];
                    *slot += offset + 1;
                    self.path.push(v);
                    self.slots.push(0);
                    if v == sink {
                        let found = StPath(self.path.clone());
                        self.path.pop();
                        self.slots.pop();
                        return Some(found);
                    }
                }
                None => {
                    self.path.pop();
                    self.slots.pop();
                }
            }
        }
        None
    }
}

/// Collects every source-to-sink path, failing once more than `limit` exist.
pub fn enumerate_st_paths(dag: &Dag, limit: usize) -> Result<Vec<StPath>, GraphError> {
    let mut out = Vec::new();
    for p in StPaths::new(dag) {
        if out.len() == limit {
            return Err(GraphError::PathBudgetExceeded { limit });
        }
        out.push(p);
    }
    Ok(out)
}

/// Number of source-to-sink paths, saturating at `u128::MAX`.
pub fn count_st_paths(dag: &Dag) -> u128 {
    let mut ways = vec![0u128; dag.vertex_count()];
    ways[dag.sink()] = 1;
    for &u in dag.topo().order().iter().rev() {
        if u == dag.sink() {
            continue;
        }
        ways[u] = dag.successors(u).iter().fold(0u128, |acc, &v| acc.saturating_add(ways[v]));
    }
    ways[dag.source()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Dag {
        Dag::new(n, (0..n - 1).map(|v| (v, v + 1)), 0, n - 1).unwrap()
    }

    fn diamond() -> Dag {
        Dag::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3).unwrap()
    }

    /// `b` diamonds in series: 3b + 1 vertices.
    fn ladder(b: usize) -> Dag {
        let mut arcs = Vec::new();
        for k in 0..b {
            let base = 3 * k;
            arcs.extend([(base, base + 1), (base, base + 2), (base + 1, base + 3), (base + 2, base + 3)]);
        }
        Dag::new(3 * b + 1, arcs, 0, 3 * b).unwrap()
    }

    #[test]
    fn stitch_examples() {
        let c = chain(5);
        let r = ReachabilityIndex::new(&c);
        assert_eq!(stitch_chain(&c, &r, &[1, 3]).unwrap().vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(
            stitch_chain(&c, &r, &[2, 1]),
            Err(GraphError::NotReachable { from: 2, to: 1 })
        );
        let d = diamond();
        let r = ReachabilityIndex::new(&d);
        assert_eq!(stitch_chain(&d, &r, &[1]).unwrap().vertices(), &[0, 1, 3]);
        assert_eq!(stitch_chain(&d, &r, &[]).unwrap().vertices(), &[0, 1, 3]);
        assert_eq!(stitch_chain(&d, &r, &[0, 2, 3]).unwrap().vertices(), &[0, 2, 3]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_st_paths(&chain(4), 10).unwrap().len(), 1);
        let paths = enumerate_st_paths(&diamond(), 10).unwrap();
        let seqs: Vec<&[usize]> = paths.iter().map(|p| p.vertices()).collect();
        assert_eq!(seqs, vec![&[0, 1, 3][..], &[0, 2, 3][..]]);
        assert_eq!(enumerate_st_paths(&ladder(5), 1000).unwrap().len(), 32);
        assert_eq!(count_st_paths(&ladder(5)), 32);
        assert_eq!(
            enumerate_st_paths(&ladder(5), 31),
            Err(GraphError::PathBudgetExceeded { limit: 31 })
        );
        assert_eq!(enumerate_st_paths(&ladder(5), 32).unwrap().len(), 32);
    }

    #[test]
    fn single_vertex_graph_has_one_path() {
        let d = Dag::new(1, [], 0, 0).unwrap();
        let paths = enumerate_st_paths(&d, 5).unwrap();
        assert_eq!(paths, vec![StPath(vec![0])]);
        assert_eq!(count_st_paths(&d), 1);
        assert!(paths[0].check(&d).is_ok());
    }

    #[test]
    fn dead_ends_are_skipped() {
        // 2 does not reach the sink.
        let d = Dag::new(4, [(0, 1), (0, 2), (1, 3)], 0, 3).unwrap();
        assert_eq!(enumerate_st_paths(&d, 5).unwrap().len(), 1);
    }

    #[test]
    fn path_defects() {
        let d = diamond();
        assert_eq!(StPath(vec![]).check(&d), Err(PathDefect::Empty));
        assert_eq!(StPath(vec![1, 3]).check(&d), Err(PathDefect::WrongStart(1)));
        assert_eq!(StPath(vec![0, 1]).check(&d), Err(PathDefect::WrongEnd(1)));
        assert_eq!(StPath(vec![0, 3]).check(&d), Err(PathDefect::MissingArc(0, 3)));
        assert_eq!(StPath(vec![0, 9, 3]).check(&d), Err(PathDefect::UnknownVertex(9)));
        assert_eq!(StPath(vec![0, 1, 1, 3]).check(&d), Err(PathDefect::Repeated(1)));
        assert!(StPath(vec![0, 2, 3]).check(&d).is_ok());
    }
}
