use super::{Graph, Vertex};

/// Relabels `g` into a canonical representative of its isomorphism class:
/// two graphs are isomorphic iff their canonical forms are equal.
///
/// Individualization-refinement over equitable partitions, keeping the leaf
/// with the lexicographically largest adjacency rows. No automorphism
/// pruning, so intended for small graphs (at most 64 vertices).
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    assert!(n <= 64, "canonical_form supports at most 64 vertices");
    let masks = g.bitmasks();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let mut root = vec![g.vertices().collect::<Vec<_>>()];
    if n > 0 {
        refine(&masks, &mut root);
        search(&masks, root, &mut best);
    }
    let label = best.map(|(_, l)| l).unwrap_or_default();
    let edges: Vec<_> = g.edges().map(|(u, v)| (label[u], label[v])).collect();
    Graph::from_edges(n, &edges).expect("relabeling preserves simplicity")
}

fn search(masks: &[u64], cells: Vec<Vec<Vertex>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut label = vec![0; masks.len()];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let mut rows = vec![0u64; masks.len()];
        for (v, &m) in masks.iter().enumerate() {
            let mut bits = m;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[label[v]] |= 1 << label[w];
            }
        }
        if best.as_ref().map_or(true, |(b, _)| rows > *b) {
            *best = Some((rows, label));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<_> = next[target].iter().copied().filter(|&w| w != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        refine(masks, &mut next);
        search(masks, next, best);
    }
}

// Splits cells until every vertex of a cell has the same number of
// neighbors in each cell. Split order depends only on the counts, so the
// result is label-invariant.
fn refine(masks: &[u64], cells: &mut Vec<Vec<Vertex>>) {
    'outer: loop {
        let cell_masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |a, &v| a | 1 << v)).collect();
        for i in 0..cells.len() {
            if cells[i].len() == 1 {
                continue;
            }
            let sig = |v: Vertex| -> Vec<u32> { cell_masks.iter().map(|cm| (masks[v] & cm).count_ones()).collect() };
            let mut keyed: Vec<(Vec<u32>, Vertex)> = cells[i].iter().map(|&v| (sig(v), v)).collect();
            keyed.sort();
            if keyed.first().map(|k| &k.0) == keyed.last().map(|k| &k.0) {
                continue;
            }
            let mut parts: Vec<Vec<Vertex>> = Vec::new();
            for (k, (s, v)) in keyed.iter().enumerate() {
                if k == 0 || keyed[k - 1].0 != *s {
                    parts.push(Vec::new());
                }
                parts.last_mut().unwrap().push(*v);
            }
            cells.splice(i..=i, parts);
            continue 'outer;
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let e: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.n(), &e).unwrap()
    }

    #[test]
    fn distinguishes_c6_from_two_triangles() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&tt));
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(canonical_form(&Graph::empty(0)).n(), 0);
        assert_eq!(canonical_form(&Graph::empty(3)), Graph::empty(3));
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(
            n in 1usize..9,
            bits in proptest::collection::vec(any::<bool>(), 36),
            perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
        ) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n { for i in 0..j { if bits[k] { edges.push((i, j)); } k += 1; } }
            let g = Graph::from_edges(n, &edges).unwrap();
            let p: Vec<usize> = perm.into_iter().filter(|&x| x < n).collect();
            let c = canonical_form(&g);
            prop_assert_eq!(&c, &canonical_form(&relabel(&g, &p)));
            prop_assert_eq!(c.m(), g.m());
            let mut d1: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
            let mut d2: Vec<_> = c.vertices().map(|v| c.degree(v)).collect();
            d1.sort_unstable();
            d2.sort_unstable();
            prop_assert_eq!(d1, d2);
        }
    }
}
