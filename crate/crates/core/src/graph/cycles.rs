use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{Graph, GraphError, PlaneGraph, Vertex};

/// Largest cycle length `short_cycles` will enumerate.
pub const MAX_CYCLE_LEN: usize = 12;

/// A simple cycle in canonical form: it starts at its least vertex and the
/// second vertex is smaller than the last, so every cycle has exactly one
/// representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    /// Canonicalizes an arbitrary rotation/reflection of a cycle.
    pub fn new(mut walk: Vec<Vertex>) -> Self {
        assert!(walk.len() >= 3, "a cycle needs at least three vertices");
        let start = (0..walk.len()).min_by_key(|&i| walk[i]).unwrap();
        walk.rotate_left(start);
        if walk[1] > walk[walk.len() - 1] {
            walk[1..].reverse();
        }
        Cycle(walk)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Edges as ordered pairs `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Every simple cycle of length at most `max_len`, each exactly once, sorted
/// by length and then lexicographically.
pub fn short_cycles(g: &Graph, max_len: usize) -> Result<Vec<Cycle>, GraphError> {
    if max_len > MAX_CYCLE_LEN {
        return Err(GraphError::CycleBoundTooLarge(max_len));
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        path.push(s);
        on_path[s] = true;
        extend_paths(g, s, max_len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort_by(|a: &Cycle, b: &Cycle| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

// Paths from `s` through vertices larger than `s`; a cycle is recorded once,
// in the direction whose second vertex is smaller than its last.
fn extend_paths(
    g: &Graph,
    s: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let u = *path.last().unwrap();
    for &w in g.neighbors(u) {
        if w == s && path.len() >= 3 && path[1] < u {
            out.push(Cycle(path.clone()));
        }
        if w <= s || on_path[w] || path.len() == max_len {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend_paths(g, s, max_len, path, on_path, out);
        on_path[w] = false;
        path.pop();
    }
}

/// Distinct cycles sharing at least one edge.
pub fn cycles_edge_adjacent(c1: &Cycle, c2: &Cycle) -> bool {
    if c1 == c2 {
        return false;
    }
    let e1: HashSet<_> = c1.edges().collect();
    c2.edges().any(|e| e1.contains(&e))
}

fn cycles_vertex_adjacent(c1: &Cycle, c2: &Cycle) -> bool {
    c1 != c2 && c1.vertices().iter().any(|v| c2.vertices().contains(v))
}

/// Counts of (4⁻-cycle, distinct 7⁻-cycle) pairs under the edge-sharing and
/// the looser vertex-sharing reading of cycle adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleAdjacencyCounts {
    pub edge_sharing: usize,
    pub vertex_sharing: usize,
}

pub fn cycle_adjacency_counts(g: &Graph) -> CycleAdjacencyCounts {
    let cycles = short_cycles(g, 7).expect("7 is within bounds");
    let small: Vec<_> = cycles.iter().filter(|c| c.len() <= 4).collect();
    let mut counts = CycleAdjacencyCounts { edge_sharing: 0, vertex_sharing: 0 };
    for a in &small {
        for b in &cycles {
            counts.edge_sharing += cycles_edge_adjacent(a, b) as usize;
            counts.vertex_sharing += cycles_vertex_adjacent(a, b) as usize;
        }
    }
    counts
}

/// True when no cycle of length at most 4 shares an edge with a distinct
/// cycle of length at most 7.
pub fn hypothesis_planar_odd6(pg: &PlaneGraph) -> bool {
    cycle_adjacency_counts(pg.graph()).edge_sharing == 0
}
