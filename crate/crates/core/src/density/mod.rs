//! Exact maximum average degree via densest subgraph.

mod flow;

pub use flow::FlowNetwork;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::Rational;

/// Largest order accepted by [`mad_brute`].
pub const BRUTE_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("the null graph has no non-empty subgraph")]
    EmptyGraph,
    #[error("brute-force density needs n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// A vertex set together with its exact density |E(H)|/|V(H)|.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityCertificate {
    pub subgraph: Vec<Vertex>,
    pub density: Rational,
}

impl DensityCertificate {
    fn of(g: &Graph, subgraph: Vec<Vertex>) -> Self {
        let density = Rational::new(g.induced_edge_count(&subgraph) as i64, subgraph.len() as i64);
        DensityCertificate { subgraph, density }
    }

    /// Recomputes the density from `g` and compares.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        !self.subgraph.is_empty()
            && self.subgraph.iter().all(|&v| v < g.n())
            && Rational::new(g.induced_edge_count(&self.subgraph) as i64, self.subgraph.len() as i64) == self.density
    }
}

/// Some vertex set of density strictly above `g_bound`, if any exists.
///
/// One min cut on the edge-node network: source to each edge node with
/// capacity `b`, edge node to both endpoints unbounded, each vertex to the
/// sink with capacity `a`, where `g_bound = a/b`.
fn denser_than(g: &Graph, g_bound: Rational) -> Option<Vec<Vertex>> {
    let (n, m) = (g.n(), g.m());
    if m == 0 || g_bound < Rational::ZERO {
        return (g_bound < Rational::ZERO && n > 0).then(|| g.vertices().collect());
    }
    let (a, b) = (g_bound.numer(), g_bound.denom());
    let (src, sink) = (m + n, m + n + 1);
    let inf = b.checked_mul(m as i64 + 1).expect("capacity overflow");
    let mut net = FlowNetwork::new(m + n + 2);
    for (i, (u, v)) in g.edges().enumerate() {
        net.add_arc(src, i, b);
        net.add_arc(i, m + u, inf);
        net.add_arc(i, m + v, inf);
    }
    for v in g.vertices() {
        net.add_arc(m + v, sink, a);
    }
    let flow = net.max_flow(src, sink);
    if flow >= b * m as i64 {
        return None;
    }
    let side = net.source_side(src);
    Some(g.vertices().filter(|&v| side[m + v]).collect())
}

/// A densest subgraph and its exact density.
pub fn densest_subgraph(g: &Graph) -> Result<DensityCertificate, DensityError> {
    let n = g.n();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    let mut best = DensityCertificate::of(g, g.vertices().collect());
    let mut lo = best.density;
    let mut hi = Rational::new(n as i64 - 1, 2).max(lo);
    let gap = Rational::new(1, (n * n) as i64);
    while hi - lo >= gap {
        let mid = (lo + hi) / 2;
        match denser_than(g, mid) {
            Some(set) => {
                let cert = DensityCertificate::of(g, set);
                debug_assert!(cert.density > mid);
                lo = cert.density;
                best = cert;
            }
            None => hi = mid,
        }
    }
    Ok(best)
}

/// mad(G) = 2 · max density.
pub fn mad_exact(g: &Graph) -> Result<Rational, DensityError> {
    Ok(densest_subgraph(g)?.density * 2)
}

/// Whether mad(G) <= `bound`, decided by a single flow.
pub fn mad_at_most(g: &Graph, bound: Rational) -> bool {
    g.n() == 0 || denser_than(g, bound / 2).is_none()
}

/// mad(G) by enumerating every non-empty vertex subset.
pub fn mad_brute(g: &Graph) -> Result<Rational, DensityError> {
    let n = g.n();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    if n > BRUTE_MAX_N {
        return Err(DensityError::TooLarge { n, max: BRUTE_MAX_N });
    }
    let masks = g.bitmasks();
    let mut edges = vec![0u32; 1 << n];
    let mut best = (0u32, 1u32);
    for s in 1usize..1 << n {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        edges[s] = edges[rest] + (masks[v] & rest as u64).count_ones();
        let size = s.count_ones();
        if edges[s] as u64 * best.1 as u64 > best.0 as u64 * size as u64 {
            best = (edges[s], size);
        }
    }
    Ok(Rational::new(2 * best.0 as i64, best.1 as i64))
}
