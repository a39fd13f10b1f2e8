use serde::Serialize;

use crate::graph::{blocks, Graph, Vertex};

/// An induced SK_{c+1} whose subdivision vertices have degree 2 in the host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadStructureWitness {
    /// The c + 1 branch vertices, ascending.
    pub branch: Vec<Vertex>,
    /// `((a, b), s)` with `a < b` branch vertices and `s` the 2-vertex
    /// joining them, in lexicographic pair order.
    pub subdivision: Vec<((Vertex, Vertex), Vertex)>,
}

impl BadStructureWitness {
    /// Re-checks the definition directly against `g`.
    pub fn is_valid_for(&self, g: &Graph, c: usize) -> bool {
        let k = self.branch.len();
        if k != c + 1 || self.subdivision.len() != k * (k - 1) / 2 {
            return false;
        }
        let mut all: Vec<Vertex> = self.branch.clone();
        all.extend(self.subdivision.iter().map(|&(_, s)| s));
        let mut sorted = all.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != all.len() || sorted.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for (i, &a) in self.branch.iter().enumerate() {
            for &b in &self.branch[i + 1..] {
                if g.has_edge(a, b) {
                    return false;
                }
            }
        }
        let pairs_ok = self.subdivision.iter().all(|&((a, b), s)| {
            self.branch.contains(&a) && self.branch.contains(&b) && a < b && g.neighbors(s) == [a, b]
        });
        let mut pairs: Vec<_> = self.subdivision.iter().map(|&(p, _)| p).collect();
        pairs.sort_unstable();
        pairs.dedup();
        // induced edge count of SK_{c+1} is twice the number of pairs
        pairs_ok && pairs.len() == self.subdivision.len() && g.induced_edge_count(&sorted) == 2 * pairs.len()
    }
}

// The 2-vertex whose neighborhood is exactly {a, b}, least first.
fn joiner(g: &Graph, a: Vertex, b: Vertex) -> Option<Vertex> {
    let (a, b) = (a.min(b), a.max(b));
    g.neighbors(a).iter().copied().find(|&s| g.neighbors(s) == [a, b])
}

/// Searches for a bad structure of order c + 1.
///
/// Branch candidates are vertices with at least `c` 2-neighbors; two
/// candidates are compatible when they are non-adjacent and some 2-vertex
/// has exactly them as neighbors. A bad structure is then a clique of
/// compatible candidates of size c + 1, found by backtracking.
pub fn find_bad_structure(g: &Graph, c: usize) -> Option<BadStructureWitness> {
    assert!(c >= 4, "bad structures are defined for c >= 4");
    let cand: Vec<Vertex> =
        g.vertices().filter(|&v| g.neighbors(v).iter().filter(|&&u| g.degree(u) == 2).count() >= c).collect();
    if cand.len() < c + 1 {
        return None;
    }
    let k = cand.len();
    let mut compat = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let ok = !g.has_edge(cand[i], cand[j]) && joiner(g, cand[i], cand[j]).is_some();
            compat[i][j] = ok;
            compat[j][i] = ok;
        }
    }
    fn grow(compat: &[Vec<bool>], chosen: &mut Vec<usize>, from: usize, want: usize) -> bool {
        if chosen.len() == want {
            return true;
        }
        for i in from..compat.len() {
            if compat.len() - i < want - chosen.len() {
                return false;
            }
            if chosen.iter().all(|&j| compat[i][j]) {
                chosen.push(i);
                if grow(compat, chosen, i + 1, want) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    if !grow(&compat, &mut chosen, 0, c + 1) {
        return None;
    }
    let branch: Vec<Vertex> = chosen.iter().map(|&i| cand[i]).collect();
    let mut subdivision = Vec::new();
    for (i, &a) in branch.iter().enumerate() {
        for &b in &branch[i + 1..] {
            subdivision.push(((a, b), joiner(g, a, b).expect("compatible pair")));
        }
    }
    Some(BadStructureWitness { branch, subdivision })
}

/// A component all of whose blocks are 5-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HWitness {
    /// Vertices of the component, ascending.
    pub component: Vec<Vertex>,
    /// Its blocks (each a 5-cycle's vertex set, ascending).
    pub blocks: Vec<Vec<Vertex>>,
}

impl HWitness {
    pub fn t(&self) -> usize {
        self.blocks.len()
    }
}

/// The first component (by least vertex) having at least one edge and
/// consisting only of 5-cycle blocks.
pub fn in_class_h(g: &Graph) -> Option<HWitness> {
    let bd = blocks(g);
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let mine: Vec<Vec<Vertex>> = bd.blocks.iter().filter(|b| comp.binary_search(&b[0]).is_ok()).cloned().collect();
        // a block on 5 vertices with 5 edges is a 5-cycle (it is 2-connected)
        if mine.iter().all(|b| b.len() == 5 && g.induced_edge_count(b) == 5) {
            return Some(HWitness { component: comp, blocks: mine });
        }
    }
    None
}
