use super::{below, rng};
use crate::coloring::{find_semi_coloring, lemma_y, LemmaKind, Mode, PartialColoring};
use crate::graph::{Graph, Vertex};
use crate::structures::{lemma_bound, BoundKind, DegStats};

/// A random input for one extension procedure: a graph, the center `v`
/// (always vertex 0) satisfying the procedure's degree bound, its set Y and
/// a semi-coloring of (G, Y) with `c` colors.
#[derive(Debug, Clone)]
pub struct LemmaInstance {
    pub graph: Graph,
    pub v: Vertex,
    pub y: Vec<Vertex>,
    pub phi: PartialColoring,
}

fn admissible(g: &Graph, kind: LemmaKind, c: usize) -> bool {
    let s = DegStats::of(g, 0);
    let (bk, ok) = match kind {
        LemmaKind::SemiPcf => (BoundKind::Pcf, s.n2 >= 1),
        LemmaKind::SemiPcfDeg3 => (BoundKind::Pcf3, c >= 7 && s.n2 + s.n3 >= 1),
        LemmaKind::SemiOdd => (BoundKind::Odd, s.degree % 2 == 1 || s.n1 + s.n2 >= 1),
    };
    ok && lemma_bound(g, 0, bk) <= c as i64 - 1
}

/// Samples until an admissible instance with a semi-coloring turns up.
///
/// Vertex 0 gets 1..=c+1 neighbors with target degrees drawn from
/// {1, 2, 2, 3, 4, 5}; neighbors of degree 3 or more may be joined to each
/// other, and the remaining degree goes to a random host graph of 4..=7
/// vertices.
pub fn lemma_instance(kind: LemmaKind, c: usize, seed: u64) -> Option<LemmaInstance> {
    if c < 5 || (kind == LemmaKind::SemiPcfDeg3 && c < 7) {
        return None;
    }
    let mode = if kind == LemmaKind::SemiOdd { Mode::Odd } else { Mode::Pcf };
    let mut rng = rng(seed);
    for _ in 0..1000 {
        let d = 1 + below(&mut rng, c + 1);
        let h = 4 + below(&mut rng, 4);
        let n = 1 + d + h;
        let host = 1 + d;
        let mut e: Vec<(Vertex, Vertex)> = (1..=d).map(|u| (0, u)).collect();
        let mut left: Vec<usize> = (0..d).map(|_| [1, 2, 2, 3, 4, 5][below(&mut rng, 6)] - 1).collect();
        for i in 0..d {
            for j in i + 1..d {
                if left[i] >= 2 && left[j] >= 2 && below(&mut rng, 3) == 0 {
                    e.push((1 + i, 1 + j));
                    left[i] -= 1;
                    left[j] -= 1;
                }
            }
        }
        for (i, &k) in left.iter().enumerate() {
            let mut pool: Vec<Vertex> = (host..n).collect();
            super::shuffle(&mut rng, &mut pool);
            e.extend(pool.into_iter().take(k).map(|w| (1 + i, w)));
        }
        for a in host..n {
            for b in a + 1..n {
                if below(&mut rng, 2) == 0 {
                    e.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, &e).expect("construction is simple");
        if !admissible(&g, kind, c) {
            continue;
        }
        let y = lemma_y(&g, 0, kind);
        if let Some(phi) = find_semi_coloring(&g, &y, c, mode) {
            return Some(LemmaInstance { graph: g, v: 0, y, phi });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{extend_lemma_semi_odd, extend_lemma_semi_pcf, extend_lemma_semi_pcf_deg3};

    #[test]
    fn instances_extend() {
        for seed in 0..10 {
            let i = lemma_instance(LemmaKind::SemiPcf, 5, seed).unwrap();
            extend_lemma_semi_pcf(&i.graph, i.v, &i.phi, 5).unwrap();
            let i = lemma_instance(LemmaKind::SemiPcfDeg3, 7, seed).unwrap();
            extend_lemma_semi_pcf_deg3(&i.graph, i.v, &i.phi, 7).unwrap();
            let i = lemma_instance(LemmaKind::SemiOdd, 6, seed).unwrap();
            extend_lemma_semi_odd(&i.graph, i.v, &i.phi, 6).unwrap();
        }
        assert!(lemma_instance(LemmaKind::SemiPcfDeg3, 6, 0).is_none());
    }
}
