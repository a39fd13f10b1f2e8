use serde::Serialize;

use crate::graph::{Graph, Vertex};

/// A 3⁺-vertex is easy when it has odd degree or a neighbor of degree at
/// most 2 (in the whole graph).
pub fn is_easy(g: &Graph, v: Vertex) -> bool {
    let d = g.degree(v);
    d >= 3 && (d % 2 == 1 || g.neighbors(v).iter().any(|&u| g.degree(u) <= 2))
}

/// Which lemma residue [`lemma_bound`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    /// 2d − 2n₁ − n₂
    Pcf,
    /// 2d − 2n₁ − n₂ − n₃
    Pcf3,
    /// 2d − 2n₁ − n₂ − n_e
    Odd,
}

/// Degree statistics of one vertex's neighborhood.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegStats {
    pub vertex: Vertex,
    pub degree: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4_plus: usize,
    /// Easy neighbors.
    pub ne: usize,
    neighbor_degrees: Vec<usize>,
}

impl DegStats {
    pub fn of(g: &Graph, v: Vertex) -> Self {
        let mut neighbor_degrees: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
        neighbor_degrees.sort_unstable();
        let count = |d: usize| neighbor_degrees.iter().filter(|&&x| x == d).count();
        DegStats {
            vertex: v,
            degree: g.degree(v),
            n1: count(1),
            n2: count(2),
            n3: count(3),
            n4_plus: neighbor_degrees.iter().filter(|&&x| x >= 4).count(),
            ne: g.neighbors(v).iter().filter(|&&u| is_easy(g, u)).count(),
            neighbor_degrees,
        }
    }

    /// Number of neighbors of degree exactly `d`.
    pub fn n_eq(&self, d: usize) -> usize {
        self.neighbor_degrees.iter().filter(|&&x| x == d).count()
    }

    /// Number of `d⁻`-neighbors.
    pub fn n_at_most(&self, d: usize) -> usize {
        self.neighbor_degrees.iter().filter(|&&x| x <= d).count()
    }

    /// Number of `d⁺`-neighbors.
    pub fn n_at_least(&self, d: usize) -> usize {
        self.neighbor_degrees.iter().filter(|&&x| x >= d).count()
    }

    /// The residue 2d − (terms) of the chosen lemma; compare against c.
    pub fn residue(&self, kind: BoundKind) -> i64 {
        let base = 2 * self.degree as i64 - 2 * self.n1 as i64 - self.n2 as i64;
        match kind {
            BoundKind::Pcf => base,
            BoundKind::Pcf3 => base - self.n3 as i64,
            BoundKind::Odd => base - self.ne as i64,
        }
    }
}

/// Residue of the lemma bound at `v`: `2d(v) − 2n₁(v) − n₂(v)` minus
/// `n₃(v)` or `n_e(v)` for the respective kinds.
pub fn lemma_bound(g: &Graph, v: Vertex, kind: BoundKind) -> i64 {
    DegStats::of(g, v).residue(kind)
}

/// Neighbors of `v` whose degree lies in `lo..=hi`, ascending.
pub fn neighbors_with_degree(g: &Graph, v: Vertex, lo: usize, hi: usize) -> Vec<Vertex> {
    g.neighbors(v).iter().copied().filter(|&u| (lo..=hi).contains(&g.degree(u))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertex_with_one_two_neighbor() {
        // v=0 adjacent to 1 (2-vertex, other end 4) and to 2,3 of degree 3
        let e = [(0, 1), (1, 4), (0, 2), (0, 3), (2, 3), (2, 5), (3, 5), (4, 5), (4, 6), (5, 6)];
        let g = Graph::from_edges(7, &e).unwrap();
        let s = DegStats::of(&g, 0);
        assert_eq!((s.degree, s.n1, s.n2, s.n3), (3, 0, 1, 2));
        assert_eq!(lemma_bound(&g, 0, BoundKind::Pcf), 5);
        assert_eq!(s.n1 + s.n2 + s.n3 + s.n4_plus, s.degree);
    }

    #[test]
    fn isolated_vertex_residue_is_zero() {
        let g = Graph::empty(1);
        for kind in [BoundKind::Pcf, BoundKind::Pcf3, BoundKind::Odd] {
            assert_eq!(lemma_bound(&g, 0, kind), 0);
        }
    }

    #[test]
    fn subdivided_five_regular_branch_vertex() {
        // two branch vertices, five parallel edges subdivided: K_{2,5}
        let e: Vec<_> = (0..5).flat_map(|i| [(0, 2 + i), (1, 2 + i)]).collect();
        let g = Graph::from_edges(7, &e).unwrap();
        let s = DegStats::of(&g, 0);
        assert_eq!((s.n2, s.ne), (5, 0));
        assert_eq!(s.residue(BoundKind::Odd), 5);
        assert!(is_easy(&g, 0), "odd degree");
        assert!(!is_easy(&g, 2), "2-vertices are never easy");
    }

    #[test]
    fn easy_by_two_neighbor() {
        // 4-vertex 0 with a pendant path 0-5-6
        let e = [(0, 1), (0, 2), (0, 3), (0, 5), (5, 6), (1, 2), (2, 3), (3, 4), (4, 1)];
        let g = Graph::from_edges(7, &e).unwrap();
        assert!(is_easy(&g, 0));
        assert_eq!(neighbors_with_degree(&g, 0, 0, 2), vec![5]);
        assert_eq!(DegStats::of(&g, 0).n_at_least(3), 3);
    }
}
