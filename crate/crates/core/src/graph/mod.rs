//! Simple graphs, multigraphs, plane graphs and the structural primitives
//! (blocks, girth, short cycles, threads) every other module builds on.

mod blocks;
mod canon;
mod cycles;
mod graph6;
mod plane;
mod threads;

pub use blocks::{blocks, BlockDecomposition};
pub use canon::canonical_form;
pub use cycles::{
    cycle_adjacency_counts, cycles_edge_adjacent, girth, hypothesis_planar_odd6, short_cycles,
    Cycle, CycleAdjacencyCounts, MAX_CYCLE_LEN,
};
pub use graph6::{parse_graph6, write_graph6};
pub use plane::PlaneGraph;
pub use threads::{threads, Thread, ThreadDecomposition, ThreadEnds};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex identifier. Vertices of an `n`-vertex graph are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("plane graph: {0}")]
    Plane(String),
    #[error("cycle length bound {0} exceeds the supported maximum {max}", max = MAX_CYCLE_LEN)]
    CycleBoundTooLarge(usize),
}

/// Either an abstract graph or a plane graph, for operations that accept
/// both and need the embedding only in some modes.
#[derive(Debug, Clone, Copy)]
pub enum GraphRef<'a> {
    Plain(&'a Graph),
    Plane(&'a PlaneGraph),
}

impl<'a> GraphRef<'a> {
    pub fn graph(&self) -> &'a Graph {
        match *self {
            GraphRef::Plain(g) => g,
            GraphRef::Plane(pg) => pg.graph(),
        }
    }

    pub fn plane(&self) -> Option<&'a PlaneGraph> {
        match *self {
            GraphRef::Plain(_) => None,
            GraphRef::Plane(pg) => Some(pg),
        }
    }
}

impl<'a> From<&'a Graph> for GraphRef<'a> {
    fn from(g: &'a Graph) -> Self {
        GraphRef::Plain(g)
    }
}

impl<'a> From<&'a PlaneGraph> for GraphRef<'a> {
    fn from(pg: &'a PlaneGraph) -> Self {
        GraphRef::Plane(pg)
    }
}

/// A finite simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeListRepr", into = "EdgeListRepr")]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = GraphError;
    fn try_from(r: EdgeListRepr) -> Result<Self, Self::Error> {
        Graph::from_edges(r.n, &r.edges)
    }
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr { n: g.n(), edges: g.edges().collect() }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an explicit edge list, rejecting loops, repeated
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Builds a graph from 0/1 adjacency bitmasks (`n <= 64`).
    pub(crate) fn from_bitmasks(masks: &[u64]) -> Self {
        let n = masks.len();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, &mask) in masks.iter().enumerate() {
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                adj[u].push(v);
                if u < v {
                    m += 1;
                }
            }
        }
        Graph { adj, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_null(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Adjacency bitmasks; only valid for `n <= 64`.
    pub fn bitmasks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs at most 64 vertices");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect()
    }

    /// The subgraph induced by `keep` (sorted, duplicate-free), relabelled
    /// to `0..keep.len()` in the order given. The second component maps new
    /// ids back to old ones.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<_> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect::<Vec<Vec<Vertex>>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        (Graph { adj, m }, keep.to_vec())
    }

    /// `G - removed`, keeping the original vertex ids of the survivors in
    /// the returned map.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut drop = vec![false; self.n()];
        for &v in removed {
            drop[v] = true;
        }
        let keep: Vec<_> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Number of edges with both ends in `set`.
    pub fn induced_edge_count(&self, set: &[Vertex]) -> usize {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        set.iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| inside[w]).count())
            .sum::<usize>()
            / 2
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + shift).collect()));
        Graph { adj, m: self.m + other.m }
    }

    /// A copy with the extra edges added.
    pub fn with_edges(&self, extra: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend_from_slice(extra);
        Graph::from_edges(self.n(), &edges)
    }

    /// A copy with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(Vec::new).take(extra));
        Graph { adj, m: self.m }
    }
}

/// A loopless multigraph: parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    /// The underlying simple graph (parallel edges merged).
    pub fn simple(&self) -> Graph {
        let mut pairs: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        Graph::from_edges(self.n, &pairs).expect("loopless pairs are valid")
    }

    pub fn is_simple(&self) -> bool {
        self.simple().m() == self.edges.len()
    }

    /// True when this is the simple complete graph on its vertex set.
    pub fn is_simple_complete(&self) -> bool {
        self.is_simple() && self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.simple().is_connected()
    }

    /// Subdivides every edge once. Original vertices keep their ids; edge
    /// `i` becomes vertex `n + i`.
    pub fn subdivided(&self) -> Graph {
        let mut e = Vec::with_capacity(2 * self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            e.push((u, self.n + i));
            e.push((v, self.n + i));
        }
        Graph::from_edges(self.n + self.edges.len(), &e).expect("subdivision of a loopless multigraph is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_from_edges() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.m(), 5);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.neighbors(0), &[1, 4]);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(0, 1), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, &[(1, 0), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn induced_and_removal() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (h, map) = k4.remove_vertices(&[2]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(k4.induced_edge_count(&[0, 1, 2]), 3);
    }

    #[test]
    fn multigraph_regularity() {
        let g0 = Multigraph::new(2, vec![(0, 1); 5]).unwrap();
        assert_eq!(g0.regularity(), Some(5));
        assert!(!g0.is_simple());
        assert_eq!(g0.simple().m(), 1);
        assert!(Multigraph::new(2, vec![(1, 1)]).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(g, back);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
