//! Deterministic constructors for the named families, seeded random corpora,
//! exhaustive enumeration of small connected graphs and plane fixtures.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`; a uniform index
//! below `k` is `next_u64() % k`. Shuffles are Fisher–Yates from the back.
//! The integer stream is platform independent, so outputs are reproducible.

mod enumerate;
mod lemma;
pub mod plane;
mod spec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::density::mad_at_most;
use crate::graph::{Graph, GraphError, Multigraph, Vertex};
use crate::Rational;

pub use enumerate::{all_graphs, connected_graphs, connected_graphs_up_to};
pub use lemma::{lemma_instance, LemmaInstance};
pub use spec::FamilySpec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("invalid attachment {index}: only {n} vertices exist")]
    Attachment { index: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unrecognized family spec {0:?}")]
    Spec(String),
    #[error("generated graph fails its family predicate: {0}")]
    Postcondition(String),
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn below(rng: &mut ChaCha8Rng, k: usize) -> usize {
    (rng.next_u64() % k as u64) as usize
}

pub(crate) fn shuffle<T>(rng: &mut ChaCha8Rng, xs: &mut [T]) {
    for i in (1..xs.len()).rev() {
        let j = below(rng, i + 1);
        xs.swap(i, j);
    }
}

/// SK_n: K_n with every edge subdivided once. Branch vertices are `0..n`;
/// the vertex subdividing `ij` (i < j) follows in lexicographic pair order.
pub fn gen_sk(n: usize) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(GenError::Parameter(format!("SK_n needs n >= 2, got {n}")));
    }
    let mut e = Vec::new();
    let mut next = n;
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, next));
            e.push((j, next));
            next += 1;
        }
    }
    Ok(Graph::from_edges(next, &e)?)
}

pub fn gen_cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::Parameter(format!("a cycle needs n >= 3, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &e)?)
}

/// A connected graph whose blocks are 5-cycles. Starts from the 5-cycle
/// `0..5`; attachment `a` adds a new 5-cycle through the existing vertex
/// `a` and four fresh vertices.
pub fn gen_ht(attachments: &[usize]) -> Result<Graph, GenError> {
    let mut e: Vec<(Vertex, Vertex)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let mut n = 5;
    for &a in attachments {
        if a >= n {
            return Err(GenError::Attachment { index: a, n });
        }
        e.extend([(a, n), (n, n + 1), (n + 1, n + 2), (n + 2, n + 3), (n + 3, a)]);
        n += 4;
    }
    Ok(Graph::from_edges(n, &e)?)
}

/// t blocks in a chain, each new 5-cycle hanging off a vertex of the
/// previous one that is not its attachment point.
pub fn gen_ht_chain(t: usize) -> Result<Graph, GenError> {
    if t == 0 {
        return Err(GenError::Parameter("t must be at least 1".into()));
    }
    let att: Vec<usize> = (1..t).map(|i| if i == 1 { 2 } else { 5 + 4 * (i - 2) + 1 }).collect();
    gen_ht(&att)
}

/// Subdivides every edge of `g0` once (edge `i` becomes vertex `n + i`).
pub fn gen_subdivided(g0: &Multigraph) -> Graph {
    g0.subdivided()
}

/// K_n as a multigraph.
pub fn complete_multigraph(n: usize) -> Multigraph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    Multigraph::new(n, e).expect("complete graph is loopless")
}

/// A connected loopless r-regular multigraph on `n` vertices from the
/// configuration model, resampling until loopless and connected.
pub fn random_regular_multigraph(r: usize, n: usize, seed: u64) -> Result<Multigraph, GenError> {
    if n < 2 || r == 0 || (n * r) % 2 == 1 {
        return Err(GenError::Parameter(format!("no connected {r}-regular multigraph on {n} vertices")));
    }
    let mut rng = rng(seed);
    for _ in 0..10_000 {
        let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat(v).take(r)).collect();
        shuffle(&mut rng, &mut stubs);
        let edges: Vec<_> = stubs.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let m = Multigraph::new(n, edges)?;
        if m.is_connected() {
            return Ok(m);
        }
    }
    Err(GenError::Parameter(format!("configuration model kept failing for r = {r}, n = {n}")))
}

/// An r-regular bipartite multigraph on `n + n` vertices as a union of r
/// random perfect matchings (always loopless; connected not guaranteed).
pub fn random_bipartite_regular_multigraph(r: usize, n: usize, seed: u64) -> Result<Multigraph, GenError> {
    if n == 0 || r == 0 {
        return Err(GenError::Parameter("need r, n >= 1".into()));
    }
    let mut rng = rng(seed);
    let mut e = Vec::with_capacity(r * n);
    for _ in 0..r {
        let mut perm: Vec<usize> = (0..n).collect();
        shuffle(&mut rng, &mut perm);
        e.extend(perm.iter().enumerate().map(|(i, &j)| (i, n + j)));
    }
    Ok(Multigraph::new(2 * n, e)?)
}

/// G(n, p) with exact rational `p`: each pair in lexicographic order is kept
/// when `next_u64() % denom < numer`.
pub fn gen_gnp(n: usize, p: Rational, seed: u64) -> Result<Graph, GenError> {
    if p < Rational::ZERO || p > Rational::ONE {
        return Err(GenError::Parameter(format!("p = {p} is not a probability")));
    }
    let mut rng = rng(seed);
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_u64() % (p.denom() as u64) < p.numer() as u64 {
                e.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &e)?)
}

/// Random graph with mad ≤ `bound`: all pairs in shuffled order, each added
/// when the exact density test still passes.
pub fn gen_random_mad_bounded(n: usize, bound: Rational, seed: u64) -> Result<Graph, GenError> {
    if n > 64 {
        return Err(GenError::Parameter(format!("n = {n} > 64")));
    }
    let mut pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut rng = rng(seed);
    shuffle(&mut rng, &mut pairs);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        let h = g.with_edges(&[(u, v)])?;
        if mad_at_most(&h, bound) {
            g = h;
        }
    }
    Ok(g)
}

/// Graphs in which every branch vertex has degree 4 and exactly seven close
/// 2-vertices, so the 2/9 rule balances every charge at 22/9.
///
/// Branch vertices `0..2k` sit on a cycle joined by 3-threads; `2i` and
/// `2i + 1` also share a 1-thread, and `2i + 1` is adjacent to `2i + 2`.
pub fn gen_odd4_tight(k: usize) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(GenError::Parameter("k must be at least 1".into()));
    }
    let b = 2 * k;
    let mut n = b;
    let mut e = Vec::new();
    let mut thread = |e: &mut Vec<(Vertex, Vertex)>, a: Vertex, z: Vertex, len: usize| {
        let mut prev = a;
        for _ in 0..len {
            e.push((prev, n));
            prev = n;
            n += 1;
        }
        e.push((prev, z));
    };
    for i in 0..b {
        thread(&mut e, i, (i + 1) % b, 3);
    }
    for i in 0..k {
        thread(&mut e, 2 * i, 2 * i + 1, 1);
    }
    for i in 0..k {
        e.push((2 * i + 1, (2 * i + 2) % b));
    }
    Ok(Graph::from_edges(n, &e)?)
}
