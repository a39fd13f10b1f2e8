use std::collections::HashSet;

use crate::graph::{canonical_form, Graph};

/// All connected graphs on exactly `n` vertices up to isomorphism, as
/// canonical forms in a deterministic order.
///
/// Built by vertex augmentation: every connected graph has a vertex whose
/// removal leaves it connected, so adding one vertex with every non-empty
/// neighborhood to each connected graph on n − 1 vertices reaches them all.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "enumeration is meant for n <= 10");
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let masks = g.bitmasks();
            for subset in 1u64..(1 << k) {
                let mut m = masks.clone();
                for (v, row) in m.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                m.push(subset);
                let h = canonical_form(&Graph::from_bitmasks(&m));
                if seen.insert(h.bitmasks()) {
                    next.push(h);
                }
            }
        }
        next.sort_by_key(|h| (h.m(), h.bitmasks()));
        level = next;
    }
    level
}

/// All graphs on exactly `n` vertices up to isomorphism, connected or not,
/// by canonical dedup over every edge subset. Meant for n ≤ 6.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "edge-subset enumeration is meant for n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for subset in 0u64..(1 << pairs.len()) {
        let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, &p)| p).collect();
        let h = canonical_form(&Graph::from_edges(n, &e).expect("distinct pairs"));
        if seen.insert(h.bitmasks()) {
            out.push(h);
        }
    }
    out.sort_by_key(|h| (h.m(), h.bitmasks()));
    out
}

/// Connected graphs on 1..=`n_max` vertices, smallest first.
pub fn connected_graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(connected_graphs).collect()
}
